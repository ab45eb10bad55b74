import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

from loguru import logger

from ..errors import DomainError


class OrbitFamily(str, Enum):
    """Classical Lie algebra families, keyed by their partition parity rules."""
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'

    @classmethod
    def parse(cls, tag: str) -> 'OrbitFamily':
        try:
            return cls(tag.strip().upper())
        except ValueError:
            raise DomainError(f"Unknown orbit family: {tag}", code="unknown_family")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""
    parts: Tuple[int, ...] = ()
    total: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in parts):
            raise DomainError(f"Partition parts must be positive integers: {list(parts)}",
                              code="invalid_partition")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"Partition parts must be weakly decreasing: {list(parts)}",
                              code="invalid_partition")
        object.__setattr__(self, 'parts', parts)
        object.__setattr__(self, 'total', sum(parts))

    @classmethod
    def of(cls, parts: Iterable[int]) -> 'Partition':
        """Build from any iterable, sorting into decreasing order."""
        return cls(tuple(sorted((p for p in parts if p > 0), reverse=True)))

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return '[' + ','.join(str(p) for p in self.parts) + ']'

    def exponent_form(self) -> str:
        runs = []
        for part in sorted(set(self.parts), reverse=True):
            k = self.multiplicity(part)
            runs.append(f"{part}^{k}" if k > 1 else str(part))
        return '[' + ','.join(runs) + ']'

    def to_list(self) -> List[int]:
        return list(self.parts)


_RUN = re.compile(r'^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$')


def parse_partition(text: str) -> Partition:
    """Parse "[3^2,1^4]" or "[3,3,1,1,1,1]" (mixed runs are accepted)."""
    body = text.strip()
    if body.startswith('[') and body.endswith(']'):
        body = body[1:-1]
    if not body.strip():
        return Partition()

    parts: List[int] = []
    for item in body.split(','):
        match = _RUN.match(item)
        if not match:
            raise DomainError(f"Bad partition literal: {text}", code="bad_literal")
        part, exponent = int(match.group(1)), int(match.group(2) or 1)
        if part < 1:
            raise DomainError(f"Bad partition literal: {text}", code="bad_literal")
        parts.extend([part] * exponent)
    return Partition(tuple(parts))


def transpose(p: Partition) -> Partition:
    """Conjugate partition, read off column heights."""
    if not p.parts:
        return Partition()
    columns = [0] * p.parts[0]
    for part in p.parts:
        for i in range(part):
            columns[i] += 1
    return Partition(tuple(columns))


def dominates(p: Partition, q: Partition) -> bool:
    """True iff every prefix sum of p is at least the matching prefix sum of q."""
    if p.total != q.total:
        raise DomainError(f"incomparable totals: {p.total} and {q.total}",
                          code="incomparable_totals")
    length = max(len(p), len(q))
    left = list(p.parts) + [0] * (length - len(p))
    right = list(q.parts) + [0] * (length - len(q))
    sum_p = sum_q = 0
    for x, y in zip(left, right):
        sum_p += x
        sum_q += y
        if sum_p < sum_q:
            return False
    return True


def _bad_parity(fam: OrbitFamily) -> Optional[int]:
    """Parity of parts that must occur with even multiplicity (None for A)."""
    if fam in (OrbitFamily.B, OrbitFamily.D):
        return 0
    if fam == OrbitFamily.C:
        return 1
    return None


def _total_parity_ok(total: int, fam: OrbitFamily) -> bool:
    if fam == OrbitFamily.B:
        return total % 2 == 1
    if fam in (OrbitFamily.C, OrbitFamily.D):
        return total % 2 == 0
    return True


def is_valid(p: Partition, fam: OrbitFamily) -> bool:
    parity = _bad_parity(fam)
    if parity is None:
        return True
    if not _total_parity_ok(p.total, fam):
        return False
    return all(k % 2 == 0 for part, k in p.multiplicities().items() if part % 2 == parity)


def collapse(p: Partition, fam: OrbitFamily) -> Partition:
    """Largest fam-partition dominated by p.

    Repeatedly takes the largest part q of the forbidden parity occurring an odd
    number of times, lowers its last occurrence to q - 1 and raises the first later
    part r < q - 1 to r + 1 (a new part 1 when there is none).
    """
    if not _total_parity_ok(p.total, fam):
        raise DomainError(f"no {fam.value}-partition of total {p.total}",
                          code="parity_mismatch")
    parity = _bad_parity(fam)
    if parity is None:
        return p

    parts = list(p.parts)
    while True:
        counts = Counter(parts)
        offenders = [q for q, k in counts.items() if q % 2 == parity and k % 2 == 1]
        if not offenders:
            break
        q = max(offenders)
        last = len(parts) - 1 - parts[::-1].index(q)
        parts[last] = q - 1
        for j in range(last + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = [x for x in parts if x > 0]

    result = Partition(tuple(parts))
    assert is_valid(result, fam), f"collapse produced invalid {result} for {fam.value}"
    return result


def partitions_of(total: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """All partitions of total in decreasing lexicographic order."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


def enumerate_partitions(total: int, fam: OrbitFamily) -> List[Partition]:
    if total < 0:
        raise DomainError(f"negative total: {total}", code="invalid_partition")
    return [Partition(parts) for parts in partitions_of(total)
            if is_valid(Partition(parts), fam)]


@lru_cache(maxsize=None)
def _valid_partitions(total: int, fam: OrbitFamily) -> Tuple[Partition, ...]:
    return tuple(enumerate_partitions(total, fam))


def brute_force_collapse(p: Partition, fam: OrbitFamily) -> Partition:
    """Reference collapse: the dominance-maximum of valid partitions below p."""
    below = [q for q in _valid_partitions(p.total, fam) if dominates(p, q)]
    if not below:
        raise DomainError(f"no {fam.value}-partition below {p}", code="parity_mismatch")
    # A dominance maximum, if any, is also the lexicographic maximum.
    top = max(below, key=lambda q: q.parts)
    if not all(dominates(top, r) for r in below):
        raise DomainError(f"no unique maximum below {p} for {fam.value}", code="no_maximum")
    return top


BV_PAIRS = {
    (OrbitFamily.A, OrbitFamily.A),
    (OrbitFamily.C, OrbitFamily.B),
    (OrbitFamily.B, OrbitFamily.C),
    (OrbitFamily.D, OrbitFamily.D),
}


def bv_dual(p: Partition, dual_fam: OrbitFamily, target_fam: OrbitFamily) -> Partition:
    """Barbasch-Vogan dual of a dual-side partition, as a target-side partition."""
    if (dual_fam, target_fam) not in BV_PAIRS:
        raise DomainError(f"no duality from {dual_fam.value} to {target_fam.value}",
                          code="unknown_family")
    if not is_valid(p, dual_fam):
        raise DomainError(f"{p} is not a {dual_fam.value}-partition", code="invalid_partition")

    t = list(transpose(p).parts)
    if dual_fam == OrbitFamily.A:
        return Partition(tuple(t))
    if dual_fam == OrbitFamily.C:
        t = [t[0] + 1] + t[1:] if t else [1]
    elif dual_fam == OrbitFamily.B:
        t[-1] -= 1
    result = collapse(Partition.of(t), target_fam)
    logger.debug(f"bv_dual {p} {dual_fam.value}->{target_fam.value} = {result}")
    return result
