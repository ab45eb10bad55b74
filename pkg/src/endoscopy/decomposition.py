from dataclasses import dataclass, replace
from typing import Dict, FrozenSet, List, Optional, Tuple

from loguru import logger

from ..errors import DomainError
from ..parameters import (
    ArthurParameter, Base, CharacterLabel, Duality, GroupDatum, GroupFamily, SimpleParameter,
    boxplus, classifies_into, eta_of, eta_of_simple, parity_sign, sign_of_simple
)

SO_ODD, SP, SO_EVEN, MP, U = (GroupFamily.SO_ODD, GroupFamily.SP, GroupFamily.SO_EVEN,
                              GroupFamily.MP, GroupFamily.U)

# Factor family pairs (unordered) allowed for each target family.
ALLOWED_SHAPES: Dict[GroupFamily, List[FrozenSet]] = {
    SO_ODD: [frozenset([SO_ODD]), frozenset([MP])],
    SP: [frozenset([SO_EVEN, SP])],
    SO_EVEN: [frozenset([SO_EVEN]), frozenset([SP])],
    MP: [frozenset([SO_ODD, MP]), frozenset([MP]), frozenset([SO_ODD])],
    U: [frozenset([U])],
}

RELATIVE = 'relative'
ABSOLUTE = 'absolute'


@dataclass(frozen=True)
class EndoscopyDatum:
    """A factorization G0 x H -> G with its sign or character decorations."""
    target: GroupDatum
    factors: Tuple[GroupDatum, GroupDatum]
    signs: Optional[Tuple[int, int]] = None
    eta_pair: Optional[Tuple[CharacterLabel, CharacterLabel]] = None
    conjecture_basis: str = ''
    variant: Optional[str] = None
    twisted: bool = False
    sign_convention: str = RELATIVE
    alternatives: Tuple['EndoscopyDatum', ...] = ()

    def describe(self) -> str:
        left, right = self.factors
        return f"{left.label} x {right.label} -> {self.target.label}"


def _unitary(rank: int, kappa: int) -> GroupDatum:
    return GroupDatum(U, rank, kappa=kappa)


def _required_type(G: GroupDatum) -> Optional[Duality]:
    if G.family in (SO_ODD, MP):
        return Duality.SYMPLECTIC
    if G.family in (SP, SO_EVEN):
        return Duality.ORTHOGONAL
    return None


def _check_parameter(G: GroupDatum, psi1: SimpleParameter, psi2: ArthurParameter):
    """Explain why psi1 + psi2 does not classify into G, or return quietly."""
    psi = boxplus(ArthurParameter((psi1,)), psi2)
    if psi.N != G.twisted_size:
        raise DomainError(
            f"N(psi) = {psi.N} does not match {G.label}, which needs N = {G.twisted_size}",
            code="size_mismatch")
    tau = psi1.tau
    if G.family == U:
        if tau.base != Base.QUADRATIC_EXT:
            raise DomainError(f"unitary targets need conjugate self-dual data, got {tau.id}",
                              code="parity_rule")
        if G.kappa is None:
            raise DomainError(f"{G.label} needs a sign kappa", code="parity_rule")
        expected = G.kappa * parity_sign(G.rank - 1)
        if sign_of_simple(psi1) != expected:
            raise DomainError(
                f"sign rule: eta_(tau,b) = eta_tau(-1)^(b-1) must equal kappa(-1)^(N-1) = {expected}"
                f" for ({tau.id},{psi1.b}) in {G.label}", code="parity_rule")
    else:
        if tau.base != Base.PLAIN:
            raise DomainError(f"{G.label} needs self-dual data over F, got {tau.id}", code="parity_rule")
        required = _required_type(G)
        if sign_of_simple(psi1) != required:
            rule = ("tau symplectic requires b odd, tau orthogonal requires b even"
                    if required == Duality.SYMPLECTIC else
                    "tau symplectic requires b even, tau orthogonal requires b odd")
            raise DomainError(
                f"parity rule for {G.family.value}: ({tau.id},{psi1.b}) must be of "
                f"{required.value.lower()} type ({rule})", code="parity_rule")
    if not classifies_into(psi, G):
        raise DomainError(f"{psi} does not classify into {G.label}", code="parity_rule")


def elliptic_decompose(G: GroupDatum, psi1: SimpleParameter, psi2: ArthurParameter) -> EndoscopyDatum:
    """Endoscopy datum attached to psi = psi1 + psi2 with psi1 = (tau, b)."""
    _check_parameter(G, psi1, psi2)
    a, b = psi1.tau.a, psi1.b
    ab = a * b
    N = G.twisted_size
    eta1, eta2 = eta_of_simple(psi1), eta_of(psi2)

    if G.family == SO_ODD:
        rest = (N - ab) // 2
        primary = EndoscopyDatum(G, (GroupDatum(SO_ODD, ab // 2), GroupDatum(SO_ODD, rest)),
                                 conjecture_basis=f"SOodd:a-{'even' if a % 2 == 0 else 'odd'}")
        mp_target = GroupDatum(MP, G.rank)
        if a % 2 == 0:
            alternatives = (
                EndoscopyDatum(mp_target, (GroupDatum(SO_ODD, ab // 2), GroupDatum(MP, rest)),
                               conjecture_basis="SOodd:a-even:metaplectic-mixed", variant='Mp'),
                EndoscopyDatum(mp_target, (GroupDatum(MP, ab // 2), GroupDatum(MP, rest)),
                               conjecture_basis="SOodd:a-even:metaplectic-pair", variant='Mp'),
            )
        else:
            alternatives = (
                EndoscopyDatum(G, (GroupDatum(MP, ab // 2), GroupDatum(MP, rest)),
                               conjecture_basis="SOodd:a-odd:metaplectic-pair", variant='Mp'),
                EndoscopyDatum(mp_target, (GroupDatum(SO_ODD, ab // 2), GroupDatum(SO_ODD, rest)),
                               conjecture_basis="SOodd:a-odd:howe-dual", variant='Mp'),
            )
        datum = replace(primary, alternatives=alternatives)

    elif G.family == MP:
        rest = (N - ab) // 2
        if a % 2 == 0:
            datum = EndoscopyDatum(
                G, (GroupDatum(SO_ODD, ab // 2), GroupDatum(MP, rest)),
                conjecture_basis="Mp:a-even", variant='Mp',
                alternatives=(EndoscopyDatum(G, (GroupDatum(MP, ab // 2), GroupDatum(MP, rest)),
                                             conjecture_basis="Mp:a-even:metaplectic-pair", variant='Mp'),))
        else:
            datum = EndoscopyDatum(G, (GroupDatum(SO_ODD, ab // 2), GroupDatum(SO_ODD, rest)),
                                   conjecture_basis="Mp:a-odd:howe-dual", variant='Mp')

    elif G.family == SP:
        if a % 2 == 0:
            datum = EndoscopyDatum(
                G, (GroupDatum(SO_EVEN, ab // 2, eta=eta1), GroupDatum(SP, (N - 1 - ab) // 2)),
                conjecture_basis="Sp:a-even")
        else:
            datum = EndoscopyDatum(
                G, (GroupDatum(SP, (ab - 1) // 2), GroupDatum(SO_EVEN, (N - ab) // 2, eta=eta2)),
                conjecture_basis="Sp:a-odd")

    elif G.family == SO_EVEN:
        if a % 2 == 0:
            datum = EndoscopyDatum(
                G, (GroupDatum(SO_EVEN, ab // 2, eta=eta1), GroupDatum(SO_EVEN, (N - ab) // 2, eta=eta2)),
                eta_pair=(eta1, eta2), conjecture_basis="SOeven:a-even")
        else:
            datum = EndoscopyDatum(
                G, (GroupDatum(SP, (ab - 1) // 2), GroupDatum(SP, (N - ab - 1) // 2)),
                eta_pair=(eta1, eta2), conjecture_basis="SOeven:a-odd:twisted", twisted=True)

    else:
        if N % 2 == 0:
            signs = (parity_sign(ab), parity_sign(ab))
        else:
            signs = (parity_sign(ab + 1), parity_sign(ab))
        datum = EndoscopyDatum(
            G, (_unitary(ab, signs[0]), _unitary(N - ab, signs[1])), signs=signs,
            conjecture_basis=f"U:N-{'even' if N % 2 == 0 else 'odd'}")

    logger.debug(f"elliptic_decompose {G.label} with ({psi1.tau.id},{b}): {datum.describe()}")
    return datum


def enumerate_elliptic(G: GroupDatum) -> List[EndoscopyDatum]:
    """All elliptic (and twisted) endoscopy shapes of G, with symbolic decorations."""
    N = G.twisted_size
    data: List[EndoscopyDatum] = []

    if G.family == U:
        for n1 in range(0, N // 2 + 1):
            n2 = N - n1
            signs = (parity_sign(N - n1), parity_sign(N - n2))
            data.append(EndoscopyDatum(G, (_unitary(n1, signs[0]), _unitary(n2, signs[1])),
                                       signs=signs, conjecture_basis="U:standard"))
        return data

    if G.family == SO_EVEN:
        eta = G.eta if G.eta is not None else CharacterLabel.of('eta')
        for n1 in range(0, N // 2 + 1, 2):
            first = CharacterLabel.of("eta1'")
            second = eta * first
            data.append(EndoscopyDatum(
                G, (GroupDatum(SO_EVEN, n1 // 2, eta=first), GroupDatum(SO_EVEN, (N - n1) // 2, eta=second)),
                eta_pair=(first, second), conjecture_basis="SOeven:standard"))
        for n1 in range(1, N // 2 + 1, 2):
            first = CharacterLabel.of("eta1~")
            second = eta * first
            data.append(EndoscopyDatum(
                G, (GroupDatum(SP, (n1 - 1) // 2), GroupDatum(SP, (N - n1 - 1) // 2)),
                eta_pair=(first, second), conjecture_basis="SOeven:twisted", twisted=True))
        return data

    if G.family == SP:
        for n1 in range(0, N, 2):
            data.append(EndoscopyDatum(
                G, (GroupDatum(SO_EVEN, n1 // 2, eta=CharacterLabel.of("eta1'")),
                    GroupDatum(SP, (N - n1 - 1) // 2)),
                conjecture_basis="Sp:standard"))
        return data

    # SOodd and Mp share the symplectic dual side.
    for n1 in range(0, N // 2 + 1, 2):
        pair = (GroupDatum(SO_ODD, n1 // 2), GroupDatum(SO_ODD, (N - n1) // 2))
        data.append(EndoscopyDatum(G, pair, conjecture_basis=f"{G.family.value}:standard",
                                   variant='Mp' if G.family == MP else None))
    for n1 in range(0, N // 2 + 1, 2):
        data.append(EndoscopyDatum(G, (GroupDatum(MP, n1 // 2), GroupDatum(MP, (N - n1) // 2)),
                                   conjecture_basis=f"{G.family.value}:metaplectic-pair", variant='Mp'))
    if G.family == MP:
        for n1 in range(0, N + 1, 2):
            data.append(EndoscopyDatum(G, (GroupDatum(SO_ODD, n1 // 2), GroupDatum(MP, (N - n1) // 2)),
                                       conjecture_basis="Mp:metaplectic-mixed", variant='Mp'))
    return data


def validate(E: EndoscopyDatum) -> Tuple[bool, List[str]]:
    """Check the family identities of a datum; returns (ok, reasons)."""
    reasons: List[str] = []
    target = E.target
    left, right = E.factors

    shape = frozenset([left.family, right.family])
    if shape not in ALLOWED_SHAPES[target.family]:
        reasons.append(f"{left.family.value} x {right.family.value} is not an endoscopy shape "
                       f"of {target.family.value}")

    if left.twisted_size + right.twisted_size != target.twisted_size:
        reasons.append(f"dual sizes {left.twisted_size} + {right.twisted_size} != {target.twisted_size}")

    if target.family == U:
        N = target.rank
        if E.signs is None:
            reasons.append("unitary datum without signs")
        else:
            base = 1
            if E.sign_convention == ABSOLUTE:
                if target.kappa is None:
                    reasons.append("absolute sign convention needs the target kappa")
                else:
                    base = target.kappa
            for sign, factor in zip(E.signs, E.factors):
                expected = base * parity_sign(N - factor.rank)
                if sign != expected:
                    reasons.append(f"sign {sign} on {factor.label} violates kappa_i = {expected}")

    if target.family == SO_EVEN and E.eta_pair is not None and target.eta is not None:
        product = E.eta_pair[0] * E.eta_pair[1]
        if product != target.eta:
            reasons.append(f"eta1*eta2 = {product} differs from eta = {target.eta}")

    if reasons:
        logger.debug(f"validate {E.describe()}: {reasons}")
    return (not reasons, reasons)
