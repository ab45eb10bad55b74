from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple

from ..errors import DomainError
from ..parameters import GroupDatum, GroupFamily, orthogonal
from ..partitions import OrbitFamily, Partition, is_valid
from .grading import FamilyLike, hook_partition, orbit_family_of


@dataclass(frozen=True)
class FormLabel:
    """Opaque quadratic or hermitian form: a dimension and an invariant token."""
    dimension: int
    invariant: str

    def __str__(self) -> str:
        return f"{self.invariant}[{self.dimension}]"


@dataclass(frozen=True)
class RationalOrbitKey:
    partition: Partition
    q_d: Optional[FormLabel] = None
    q_1: Optional[FormLabel] = None


def _family_tag(family: FamilyLike) -> str:
    """'A'..'D' or 'Mp'; Mp keeps its own tag so its factors stay metaplectic."""
    if isinstance(family, GroupFamily) and family == GroupFamily.MP:
        return 'Mp'
    if isinstance(family, str) and family.strip().lower() == 'mp':
        return 'Mp'
    if isinstance(family, str) and family.strip().upper() == 'U':
        return 'A'
    return orbit_family_of(family).value


def _check_shape(tag: str, m_size: int, d: int, c: int) -> Partition:
    fam = OrbitFamily.C if tag == 'Mp' else OrbitFamily(tag)
    rest = m_size - c * d
    if rest < 0:
        raise DomainError(f"m_size {m_size} is smaller than c*d = {c * d}", code="parity_rule")
    p = hook_partition(d, c, rest)
    if not is_valid(p, fam):
        raise DomainError(f"[{d}^{c} 1^{rest}] is not a {fam.value}-partition: "
                          f"{_rule(fam)}", code="parity_rule")
    if fam == OrbitFamily.C and d % 2 and c % 2:
        raise DomainError(f"[{d}^{c} 1^{rest}]: odd d needs an even number c of d-blocks "
                          f"for a symplectic stabilizer, got c = {c}", code="parity_rule")
    return p


def _rule(fam: OrbitFamily) -> str:
    if fam == OrbitFamily.C:
        return "symplectic partitions need even total and odd parts of even multiplicity"
    if fam == OrbitFamily.B:
        return "odd orthogonal partitions need odd total and even parts of even multiplicity"
    if fam == OrbitFamily.D:
        return "even orthogonal partitions need even total and even parts of even multiplicity"
    return "general linear partitions have no parity rule"


def stabilizer(family: FamilyLike, m_size: int, d: int, c: int) -> Tuple[GroupDatum, GroupDatum]:
    """Stabilizer pair of the orbit [d^c 1^(m_size - cd)], with q_d / q_1 form slots."""
    tag = _family_tag(family)
    _check_shape(tag, m_size, d, c)
    rest = m_size - c * d

    if tag in ('C', 'Mp'):
        sym = GroupFamily.MP if tag == 'Mp' else GroupFamily.SP
        if d % 2:
            return GroupDatum(sym, c // 2), GroupDatum(sym, rest // 2)
        return orthogonal(c, form='q_d'), GroupDatum(sym, rest // 2)

    if tag in ('B', 'D'):
        if d % 2 == 0:
            return GroupDatum(GroupFamily.SP, c // 2), orthogonal(rest, form='q_1')
        return orthogonal(c, form='q_d'), orthogonal(rest, form='q_1')

    return (GroupDatum(GroupFamily.U, c, form='q_d'),
            GroupDatum(GroupFamily.U, rest, form='q_1'))


def rational_orbit_keys(family: FamilyLike, d: int, c: int, m_size: int,
                        q_d_classes: Sequence[str] = ('q_d',),
                        q_1_classes: Sequence[str] = ('q_1',)) -> List[RationalOrbitKey]:
    """Rational orbits in the stable orbit, indexed by symbolic form classes."""
    tag = _family_tag(family)
    p = _check_shape(tag, m_size, d, c)
    rest = m_size - c * d

    if tag in ('C', 'Mp'):
        if d % 2:
            return [RationalOrbitKey(p)]
        return [RationalOrbitKey(p, q_d=FormLabel(c, token)) for token in q_d_classes]

    if tag in ('B', 'D') and d % 2 == 0:
        # q_1 is fixed by q_V, so only one class survives.
        return [RationalOrbitKey(p, q_1=FormLabel(rest, q_1_classes[0]))]

    if tag == 'A' and d % 2 == 0:
        return [RationalOrbitKey(p, q_d=FormLabel(c, token), q_1=FormLabel(rest, q_1_classes[0]))
                for token in q_d_classes]

    return [RationalOrbitKey(p, q_d=FormLabel(c, qd), q_1=FormLabel(rest, q1))
            for qd, q1 in product(q_d_classes, q_1_classes)]
