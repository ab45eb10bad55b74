from typing import List, Optional

from loguru import logger

from ..errors import DomainError
from .algebra import is_elliptic
from .models import ArthurParameter, Base, CharacterLabel, Duality, GroupDatum, GroupFamily
from .signs import eta_of_simple, parity_sign, sign_of_simple


def eta_of(psi: ArthurParameter) -> CharacterLabel:
    """Symbolic quadratic character of psi: product of the summands' central characters."""
    label = CharacterLabel()
    for sp in psi.summands:
        label = label * eta_of_simple(sp)
    return label


def _check_classifiable(psi: ArthurParameter):
    if not psi.summands:
        raise DomainError("cannot classify the empty parameter", code="empty_parameter")
    if not is_elliptic(psi):
        raise DomainError(f"non-elliptic parameter is unsupported: {psi}", code="not_elliptic")
    for sp in psi.summands:
        if not sp.tau.is_self_dual:
            raise DomainError(f"{sp.tau.id} is not conjugate self-dual", code="not_self_dual")
    bases = {sp.tau.base for sp in psi.summands}
    if len(bases) > 1:
        raise DomainError(f"parameter mixes base fields: {psi}", code="mixed_base")


def classify(psi: ArthurParameter, kappa: Optional[int] = None) -> List[GroupDatum]:
    """Groups G with psi in the discrete parameters of G."""
    _check_classifiable(psi)
    N = psi.N

    if psi.summands[0].tau.base == Base.QUADRATIC_EXT:
        groups = []
        for k in ([kappa] if kappa is not None else [1, -1]):
            target = k * parity_sign(N - 1)
            if all(sign_of_simple(sp) == target for sp in psi.summands):
                groups.append(GroupDatum(GroupFamily.U, N, kappa=k))
        logger.debug(f"classify {psi} (kappa={kappa}) -> {[g.label for g in groups]}")
        return groups

    types = {sign_of_simple(sp) for sp in psi.summands}
    if types == {Duality.ORTHOGONAL}:
        if N % 2:
            groups = [GroupDatum(GroupFamily.SP, (N - 1) // 2)]
        else:
            groups = [GroupDatum(GroupFamily.SO_EVEN, N // 2, eta=eta_of(psi))]
    elif types == {Duality.SYMPLECTIC}:
        groups = [GroupDatum(GroupFamily.SO_ODD, N // 2), GroupDatum(GroupFamily.MP, N // 2)]
    else:
        groups = []
    logger.debug(f"classify {psi} -> {[g.label for g in groups]}")
    return groups


def classifies_into(psi: ArthurParameter, group: GroupDatum) -> bool:
    kappa = group.kappa if group.family == GroupFamily.U else None
    return any(g.same_shape(group) for g in classify(psi, kappa))
