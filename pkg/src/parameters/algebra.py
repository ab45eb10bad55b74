from collections import Counter
from typing import Iterable

from ..errors import DomainError
from ..partitions import Partition
from .models import ArthurParameter, SimpleParameter


def boxplus(*params: ArthurParameter) -> ArthurParameter:
    """Formal isobaric sum (multiset union)."""
    summands = []
    for psi in params:
        summands.extend(psi.summands)
    return ArthurParameter(tuple(summands))


def boxminus(psi: ArthurParameter, sp: SimpleParameter) -> ArthurParameter:
    """Remove one occurrence of sp from psi."""
    summands = list(psi.summands)
    if sp not in summands:
        raise DomainError(f"not a summand: {sp} in {psi}", code="not_a_summand")
    summands.remove(sp)
    return ArthurParameter(tuple(summands))


def with_summands(psi: ArthurParameter, extra: Iterable[SimpleParameter]) -> ArthurParameter:
    return boxplus(psi, ArthurParameter(tuple(extra)))


def dual(psi: ArthurParameter) -> ArthurParameter:
    return ArthurParameter(tuple(SimpleParameter(sp.tau.dual(), sp.b) for sp in psi.summands))


def is_self_dual(psi: ArthurParameter) -> bool:
    """Conjugate self-dual, i.e. a fixed point of dual."""
    return dual(psi) == psi


def is_elliptic(psi: ArthurParameter) -> bool:
    counts = Counter(sp.key() for sp in psi.summands)
    return all(k == 1 for k in counts.values())


def underlying_partition(psi: ArthurParameter) -> Partition:
    """The partition [b_1^{a_1} b_2^{a_2} ...] of N(psi)."""
    parts = []
    for sp in psi.summands:
        parts.extend([sp.b] * sp.tau.a)
    return Partition.of(parts)
