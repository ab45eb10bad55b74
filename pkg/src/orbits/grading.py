from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement, combinations, product
from typing import Dict, List, Tuple, Union

from loguru import logger

from ..errors import DomainError
from ..parameters import GroupFamily
from ..partitions import OrbitFamily, Partition, is_valid


class CoefficientKind(str, Enum):
    BESSEL = 'Bessel'
    FOURIER_JACOBI = 'FourierJacobi'


FamilyLike = Union[OrbitFamily, GroupFamily, str]

_GROUP_TO_ORBIT = {
    GroupFamily.SP: OrbitFamily.C,
    GroupFamily.MP: OrbitFamily.C,
    GroupFamily.SO_ODD: OrbitFamily.B,
    GroupFamily.SO_EVEN: OrbitFamily.D,
    GroupFamily.U: OrbitFamily.A,
}


def orbit_family_of(family: FamilyLike) -> OrbitFamily:
    """Partition family of a group family (Sp/Mp -> C, SOodd -> B, SOeven -> D, U -> A)."""
    if isinstance(family, OrbitFamily):
        return family
    if isinstance(family, GroupFamily):
        return _GROUP_TO_ORBIT[family]
    text = family.strip()
    if text.upper() in ('A', 'B', 'C', 'D'):
        return OrbitFamily(text.upper())
    return _GROUP_TO_ORBIT[GroupFamily.parse(text)]


def lie_algebra_dim(family: OrbitFamily, size: int) -> int:
    """dim of gl_n, so_n or sp_n for a defining module of the given size."""
    if family == OrbitFamily.A:
        return size * size
    if family == OrbitFamily.C:
        return size * (size + 1) // 2
    return size * (size - 1) // 2


@dataclass(frozen=True)
class WeightedGrading:
    partition: Partition
    family: OrbitFamily
    weights: Tuple[int, ...]
    dims: Tuple[Tuple[int, int], ...]

    def dim(self, j: int) -> int:
        return dict(self.dims).get(j, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.dims)

    @property
    def total(self) -> int:
        return sum(k for _, k in self.dims)


def weights_of(p: Partition) -> List[int]:
    """Eigenvalues of the neutral element on the defining module, largest first."""
    weights: List[int] = []
    for d in p.parts:
        weights.extend(range(d - 1, -d, -2))
    return sorted(weights, reverse=True)


def grading(family: FamilyLike, p: Partition) -> WeightedGrading:
    """Eigenspace dimensions of ad(h) on the Lie algebra, by weight pair counting."""
    fam = orbit_family_of(family)
    if not is_valid(p, fam):
        raise DomainError(f"{p} is not a {fam.value}-partition", code="invalid_partition")

    w = weights_of(p)
    counts: Counter = Counter()
    if fam == OrbitFamily.A:
        for u, v in product(w, repeat=2):
            counts[u - v] += 1
    elif fam == OrbitFamily.C:
        for i, k in combinations_with_replacement(range(len(w)), 2):
            counts[w[i] + w[k]] += 1
    else:
        for i, k in combinations(range(len(w)), 2):
            counts[w[i] + w[k]] += 1

    dims = tuple(sorted(counts.items()))
    logger.debug(f"grading {fam.value} {p}: {dict(dims)}")
    return WeightedGrading(partition=p, family=fam, weights=tuple(w), dims=dims)


def unipotent_dims(g: WeightedGrading) -> Dict[str, int]:
    dim_g1 = g.dim(1)
    return {
        'dim_VX': sum(k for j, k in g.dims if j >= 2),
        'dim_g1': dim_g1,
        'heisenberg_dim': dim_g1 + 1,
    }


def hook_partition(d: int, c: int, r: int) -> Partition:
    """The partition [d^c 1^r]."""
    if d < 1 or c < 0 or r < 0:
        raise DomainError(f"bad shape [{d}^{c} 1^{r}]", code="invalid_partition")
    return Partition.of([d] * c + [1] * r)


def coefficient_kind(family: FamilyLike, d: int, c: int, r: int) -> CoefficientKind:
    """Bessel when g_1 vanishes for [d^c 1^r], Fourier-Jacobi otherwise."""
    if r == 0:
        raise DomainError("degenerate: no 1-parts", code="degenerate")
    g = grading(family, hook_partition(d, c, r))
    return CoefficientKind.FOURIER_JACOBI if g.dim(1) else CoefficientKind.BESSEL
