from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from jinja2 import Template
from loguru import logger

from ..errors import DomainError
from ..parameters import GroupDatum, GroupFamily


class FactorKind(str, Enum):
    RANKIN_SELBERG = 'RankinSelberg'
    RHO = 'Rho'
    RHO_MINUS = 'RhoMinus'


class NormalizerFamily(str, Enum):
    U_EVEN = 'U_even'
    U_ODD = 'U_odd'
    SO_ODD = 'SOodd'
    SP = 'Sp'
    SO_EVEN = 'SOeven'


class PoleCase(IntEnum):
    CASE_1 = 1
    CASE_2 = 2
    CASE_3 = 3
    CASE_4 = 4


RHO_TABLE: Dict[NormalizerFamily, Tuple[str, str]] = {
    NormalizerFamily.U_EVEN: ('Asai+', 'Asai-'),
    NormalizerFamily.U_ODD: ('Asai-', 'Asai+'),
    NormalizerFamily.SO_ODD: ('Sym2', 'Wedge2'),
    NormalizerFamily.SP: ('Wedge2', 'Sym2'),
    NormalizerFamily.SO_EVEN: ('Wedge2', 'Sym2'),
}

LATEX_NAMES = {
    'Asai+': r'\mathrm{As}^{+}',
    'Asai-': r'\mathrm{As}^{-}',
    'Sym2': r'\mathrm{Sym}^{2}',
    'Wedge2': r'\wedge^{2}',
}

# Top of the X+ progression, as a function of b, per pole case.
X_PLUS_TOP = {
    PoleCase.CASE_1: lambda b: Fraction(b, 2),
    PoleCase.CASE_2: lambda b: Fraction(b - 2, 2),
    PoleCase.CASE_3: lambda b: Fraction(b + 1, 2),
    PoleCase.CASE_4: lambda b: Fraction(b - 1, 2),
}

_LATEX_PRODUCT = Template(
    "{% for f in factors %}L\\left({{ f.argument }},{{ f.symbol }}\\right){% endfor %}"
)


def normalizer_family(family: Union[NormalizerFamily, GroupDatum, GroupFamily, str]) -> NormalizerFamily:
    """Resolve a group (or family name) to its row of the rho table."""
    if isinstance(family, NormalizerFamily):
        return family
    if isinstance(family, GroupDatum):
        if family.family == GroupFamily.U:
            return NormalizerFamily.U_EVEN if family.rank % 2 == 0 else NormalizerFamily.U_ODD
        family = family.family
    if isinstance(family, GroupFamily):
        family = family.value
    text = family.strip()
    if text.lower() == 'mp':
        raise DomainError("rho table not defined for the metaplectic family", code="mp_rho_table")
    aliases = {'u(2n)': 'U_even', 'u_even': 'U_even', 'u(2n+1)': 'U_odd', 'u_odd': 'U_odd'}
    text = aliases.get(text.lower(), text)
    for member in NormalizerFamily:
        if member.value.lower() == text.lower():
            return member
    raise DomainError(f"Unknown normalizer family: {family}", code="unknown_family")


def rho_pair(family) -> Tuple[str, str]:
    return RHO_TABLE[normalizer_family(family)]


@dataclass(frozen=True)
class LFactor:
    """L(slope*s + intercept, tau x sigma) or L(slope*s + intercept, tau, rho)."""
    kind: FactorKind
    slope: int
    intercept: Fraction
    rho_name: Optional[str] = None
    index: Optional[int] = None

    def evaluate(self, s: Fraction) -> Fraction:
        return self.slope * Fraction(s) + self.intercept

    def argument_latex(self) -> str:
        head = 's' if self.slope == 1 else f"{self.slope}s"
        if self.intercept == 0:
            return head
        value = abs(self.intercept)
        sign = '+' if self.intercept > 0 else '-'
        if value.denominator == 1:
            return f"{head}{sign}{value.numerator}"
        return f"{head}{sign}\\frac{{{value.numerator}}}{{{value.denominator}}}"

    def symbol_latex(self) -> str:
        if self.kind == FactorKind.RANKIN_SELBERG:
            return r'\tau\times\sigma'
        return f"\\tau,{LATEX_NAMES[self.rho_name]}"


def beta_factors(family, b: int, n0_zero: bool = False) -> List[LFactor]:
    """Factors of the normalizing product for the datum (tau, b)."""
    if b < 1:
        raise DomainError(f"b must be at least 1, got {b}", code="invalid_parameter")
    rho, rho_minus = rho_pair(family)

    factors: List[LFactor] = []
    if not n0_zero:
        factors.append(LFactor(FactorKind.RANKIN_SELBERG, 1, Fraction(b + 1, 2)))
    for i in range(1, (b + 1) // 2 + 1):
        factors.append(LFactor(FactorKind.RHO, 2, Fraction(b + 2 - 2 * i), rho, i))
    for i in range(1, b // 2 + 1):
        factors.append(LFactor(FactorKind.RHO_MINUS, 2, Fraction(b + 1 - 2 * i), rho_minus, i))
    logger.debug(f"beta_factors {family} b={b}: {len(factors)} factors")
    return factors


def factorization_pairs(factors: List[LFactor]) -> List[Dict]:
    """Pair Rho(e+1) with RhoMinus(e) for each index; the identity is a label only."""
    rho = {f.index: f for f in factors if f.kind == FactorKind.RHO}
    rho_minus = {f.index: f for f in factors if f.kind == FactorKind.RHO_MINUS}
    pairs = []
    for i in sorted(set(rho) & set(rho_minus)):
        pairs.append({
            'index': i,
            'rho': rho[i],
            'rho_minus': rho_minus[i],
            'identity': f"L(s,tau x tau^c) = L(s,tau,{rho[i].rho_name}) L(s,tau,{rho_minus[i].rho_name})",
        })
    return pairs


def to_latex(factors: List[LFactor]) -> str:
    return _LATEX_PRODUCT.render(
        factors=[{'argument': f.argument_latex(), 'symbol': f.symbol_latex()} for f in factors])


def pole_case(rho_has_pole: bool, second_condition: bool) -> PoleCase:
    if rho_has_pole:
        return PoleCase.CASE_1 if second_condition else PoleCase.CASE_2
    return PoleCase.CASE_3 if second_condition else PoleCase.CASE_4


def x_plus(b: int, case: PoleCase) -> List[Fraction]:
    """Candidate poles: step-1 progression down from the case's top, positive part only."""
    if b < 1:
        raise DomainError(f"b must be at least 1, got {b}", code="invalid_parameter")
    s = X_PLUS_TOP[PoleCase(case)](b)
    points = []
    while s > 0:
        points.append(s)
        s -= 1
    return points


def residual_points(b: int, case: PoleCase) -> List[Dict]:
    case = PoleCase(case)
    bound = Fraction(b + 1, 2)
    exception = Fraction(b - 1, 2)
    return [
        {'s0': s0, 'square_integrable': not (case == PoleCase.CASE_3 and s0 == exception)}
        for s0 in x_plus(b, case) if 0 < s0 <= bound
    ]
