from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set, Tuple

from loguru import logger

from ..errors import DomainError
from ..parameters import ArthurParameter, CuspidalDatum, Duality, SimpleParameter, is_elliptic


@dataclass
class PoleProfile:
    """Pole locations of the partial tensor L-functions, keyed by cuspidal datum id."""
    entries: Dict[str, Tuple[Fraction, ...]] = field(default_factory=dict)
    data: Dict[str, CuspidalDatum] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for tau_id, poles in self.entries.items():
            values = tuple(sorted((Fraction(s) for s in poles), reverse=True))
            for s in values:
                if s < 1 or (2 * s).denominator != 1:
                    raise DomainError(f"pole {s} for {tau_id} is not a half-integer >= 1",
                                      code="invalid_pole")
            if values:
                cleaned[tau_id] = values
        self.entries = dict(sorted(cleaned.items()))

    def poles(self, tau_id: str) -> Tuple[Fraction, ...]:
        return self.entries.get(tau_id, ())

    def is_empty(self) -> bool:
        return not self.entries


def _pole(b: int) -> Fraction:
    return Fraction(b + 1, 2)


def _require_elliptic(psi: ArthurParameter):
    if not is_elliptic(psi):
        raise DomainError(f"pole bookkeeping needs an elliptic parameter, got {psi}",
                          code="not_elliptic")


def pole_profile(psi: ArthurParameter) -> PoleProfile:
    """Each summand (tau, b) contributes a simple pole at (b+1)/2 to L(s, pi x tau)."""
    _require_elliptic(psi)
    entries: Dict[str, List[Fraction]] = {}
    data = {}
    for sp in psi:
        entries.setdefault(sp.tau.id, []).append(_pole(sp.b))
        data[sp.tau.id] = sp.tau
    return PoleProfile({k: tuple(v) for k, v in entries.items()}, data)


def t_set(psi: ArthurParameter) -> Set[str]:
    return {sp.tau.id for sp in psi}


def _check_parity(tau_id: str, values: List[int]):
    if len({b % 2 for b in values}) > 1:
        raise DomainError(f"parameter violates same-parity rule for {tau_id}: {values}",
                          code="same_parity_rule")


def jordan_blocks(psi: ArthurParameter, tau_id: str) -> List[int]:
    values = sorted((sp.b for sp in psi if sp.tau.id == tau_id), reverse=True)
    if not values:
        raise DomainError(f"{tau_id} does not occur in {psi}", code="not_a_summand")
    _check_parity(tau_id, values)
    return values


def maximal_summands(psi: ArthurParameter) -> List[SimpleParameter]:
    best: Dict[str, SimpleParameter] = {}
    for sp in psi:
        if sp.tau.id not in best or sp.b > best[sp.tau.id].b:
            best[sp.tau.id] = sp
    return [best[k] for k in sorted(best)]


def peel(profile: PoleProfile, tau_id: str) -> List[int]:
    """Peel off the right-most pole repeatedly; returns the b values, largest first."""
    remaining = list(profile.poles(tau_id))
    if not remaining:
        raise DomainError(f"no poles recorded for {tau_id}", code="not_a_summand")
    blocks = []
    while remaining:
        s = max(remaining)
        remaining.remove(s)
        if s in remaining:
            raise DomainError(f"pole {s} for {tau_id} is not simple", code="not_elliptic")
        blocks.append(int(2 * s - 1))
        logger.debug(f"peeled [{tau_id},{blocks[-1]}] at s = {s}")
    _check_parity(tau_id, blocks)
    return blocks


def residual_poles(profile: PoleProfile, psi: ArthurParameter) -> PoleProfile:
    """Poles of the profile not cancelled by the summands of psi."""
    removed = pole_profile(psi)
    entries = {}
    for tau_id, poles in profile.entries.items():
        left = Counter(poles) - Counter(removed.poles(tau_id))
        if left:
            entries[tau_id] = tuple(sorted(left.elements(), reverse=True))
    return PoleProfile(entries, {k: v for k, v in profile.data.items() if k in entries})


def is_complete(profile: PoleProfile, psi: ArthurParameter) -> bool:
    return residual_poles(profile, psi).is_empty()


def reconstruct(profile: PoleProfile, dims: Optional[Mapping[str, int]], N: int,
                default_duality: Duality = Duality.ORTHOGONAL) -> ArthurParameter:
    """Rebuild psi from its poles: one summand (tau, 2s-1) per pole s.

    Ids without a datum in the profile become bare tokens of dimension dims[id] and
    duality default_duality. Pass the data in the profile when the type matters.
    """
    dims = dict(dims or {})
    summands = []
    for tau_id in profile.entries:
        tau = profile.data.get(tau_id)
        if tau is None:
            if tau_id not in dims:
                raise DomainError(f"dimension of {tau_id} is unknown", code="missing_dimension")
            tau = CuspidalDatum(id=tau_id, a=dims[tau_id], duality=default_duality)
            logger.debug(f"reconstruct: {tau_id} has no datum, assuming {default_duality.value} type")
        elif tau_id in dims and dims[tau_id] != tau.a:
            raise DomainError(f"dimension of {tau_id} given as {dims[tau_id]}, datum says {tau.a}",
                              code="dimension_mismatch")
        for b in peel(profile, tau_id):
            summands.append(SimpleParameter(tau, b))
    psi = ArthurParameter(tuple(summands))
    if psi.N != N:
        raise DomainError(f"N mismatch: parameter incomplete ({psi.N} != {N})", code="n_mismatch")
    return psi
