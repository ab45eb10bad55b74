from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import pandas as pd
from jinja2 import Template
from loguru import logger

from ..config import Settings, load_settings
from ..endoscopy import ABSOLUTE, elliptic_decompose, enumerate_elliptic, validate
from ..errors import DomainError
from ..jordan import pole_profile, reconstruct
from ..kernel_cases import compile_case
from ..orbits import coefficient_kind, grading, hook_partition, lie_algebra_dim
from ..parameters import (
    ArthurParameter, Base, CuspidalDatum, Duality, GroupDatum, GroupFamily, SimpleParameter, boxminus,
    classifies_into, classify, kappa_ab, kappa_of, parity_sign
)
from ..partitions import (
    OrbitFamily, Partition, brute_force_collapse, bv_dual, collapse, is_valid, partitions_of
)
from ..serialization import load_pool
from ..spectral import (
    FactorKind, NormalizerFamily, PoleCase, beta_factors, residual_points, rho_pair, x_plus
)

B, C, D = OrbitFamily.B, OrbitFamily.C, OrbitFamily.D

EXPECTED_RHO = {
    NormalizerFamily.U_EVEN: ('Asai+', 'Asai-'),
    NormalizerFamily.U_ODD: ('Asai-', 'Asai+'),
    NormalizerFamily.SO_ODD: ('Sym2', 'Wedge2'),
    NormalizerFamily.SP: ('Wedge2', 'Sym2'),
    NormalizerFamily.SO_EVEN: ('Wedge2', 'Sym2'),
}

TEXT_TEMPLATE = """arthurkit audit
config: {{ source }}

{{ table }}

checks: {{ checks }}  cases: {{ cases }}  failures: {{ failures }}
{% for row in failed %}
FAILED {{ row.check }}: {{ row.example }}
{% endfor %}status: {{ 'OK' if failures == 0 else 'FAILED' }}
"""

# (cases, failures, first failing example)
CheckResult = Tuple[int, int, str]


def bv_golden_forms(a: int, b: int) -> Iterator[Tuple[OrbitFamily, OrbitFamily, Partition, Partition]]:
    """Closed-form duals of [b^a] for the simple parameters that admit them."""
    p = Partition.of([b] * a)
    if a % 2 == 0:
        if b % 2 == 0:
            yield C, B, p, Partition.of([a + 1] + [a] * (b - 2) + [a - 1, 1])
            yield D, D, p, Partition.of([a] * b)
        else:
            yield C, B, p, Partition.of([a + 1] + [a] * (b - 1))
            yield D, D, p, Partition.of([a] * (b - 1) + [a - 1, 1])
    elif b % 2 == 1:
        yield B, C, p, Partition.of([a] * (b - 1) + [a - 1])


class AuditRunner:
    """Cross-module consistency sweeps, one per acceptance check."""

    def __init__(self, settings: Optional[Settings] = None, max_N: Optional[int] = None):
        self.settings = settings or load_settings()
        self.bounds = dict(self.settings.bounds)
        if max_N is not None:
            self.bounds['max_N'] = max_N
        self.pool = load_pool(self.settings.tau_pool)
        self.checks: List[Tuple[str, Callable[[], CheckResult]]] = [
            ('bv_golden', self.check_bv_golden),
            ('collapse_oracle', self.check_collapse_oracle),
            ('grading_dichotomy', self.check_grading_dichotomy),
            ('case_table', self.check_case_table),
            ('sign_identities', self.check_sign_identities),
            ('beta_grammar', self.check_beta_grammar),
            ('x_plus_annotations', self.check_x_plus),
            ('jordan_round_trip', self.check_jordan_round_trip),
            ('endoscopy_sweep', self.check_endoscopy_sweep),
            ('decompose_sweep', self.check_decompose_sweep),
        ]

    def check_bv_golden(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        limit = self.bounds['bv_ab']
        for a in range(1, limit + 1):
            for b in range(1, limit // a + 1):
                for source, target, p, expected in bv_golden_forms(a, b):
                    cases += 1
                    got = bv_dual(p, source, target)
                    if got != expected:
                        failures += 1
                        example = example or f"{p} {source.value}->{target.value}: {got} != {expected}"
        return cases, failures, example

    def check_collapse_oracle(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        for total in range(self.bounds['partition_total'] + 1):
            families = [B] if total % 2 else [C, D]
            for parts in partitions_of(total):
                p = Partition(parts)
                for fam in families:
                    cases += 1
                    got, want = collapse(p, fam), brute_force_collapse(p, fam)
                    if got != want:
                        failures += 1
                        example = example or f"collapse {p} in {fam.value}: {got} != {want}"
        return cases, failures, example

    def check_grading_dichotomy(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        limit = self.bounds['grading_total']
        for fam in (B, C, D):
            for d in range(1, limit + 1):
                for c in range(1, limit // d + 1):
                    for r in range(1, limit - c * d + 1):
                        p = hook_partition(d, c, r)
                        if not is_valid(p, fam):
                            continue
                        cases += 1
                        g = grading(fam, p)
                        ok = (g.dim(1) == 0) == (d % 2 == 1) and g.total == lie_algebra_dim(fam, p.total)
                        if not ok:
                            failures += 1
                            example = example or f"{fam.value} {p}: dims {g.as_dict()}"
        return cases, failures, example

    def _case_taus(self) -> Iterator[CuspidalDatum]:
        for a in range(2, self.bounds['case_a'] + 1):
            yield CuspidalDatum(id=f"o{a}", a=a, duality=Duality.ORTHOGONAL)
            if a % 2 == 0:
                yield CuspidalDatum(id=f"s{a}", a=a, duality=Duality.SYMPLECTIC, central_nonvanishing=True)
            for eta in (1, -1):
                yield CuspidalDatum(id=f"u{a}{'+' if eta > 0 else '-'}", a=a,
                                    base=Base.QUADRATIC_EXT, eta=eta)

    def check_case_table(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        for tau in self._case_taus():
            if tau.base == Base.QUADRATIC_EXT:
                variants = [(GroupFamily.U, {'kappa': k, 'extended': e}) for k in (1, -1) for e in (False, True)]
            else:
                variants = [(f, {}) for f in (GroupFamily.SO_ODD, GroupFamily.SP, GroupFamily.SO_EVEN,
                                              GroupFamily.MP)]
            for family, kwargs in variants:
                for b in range(0, self.bounds['case_b'] + 1):
                    for c in range(1, self.bounds['case_c'] + 1):
                        try:
                            case = compile_case(family, tau, b, c, quiet=True, **kwargs)
                        except DomainError:
                            continue
                        if not case.satisfied:
                            continue
                        cases += 1
                        reasons = []
                        if not classifies_into(case.psi0, case.ambient):
                            reasons.append(f"{case.psi0} not on {case.ambient.label}")
                        if case.coefficient != coefficient_kind(case.ambient.family, case.d, case.c, case.r):
                            reasons.append(f"coefficient {case.coefficient.value}")
                        ok, why = validate(case.endoscopy)
                        reasons.extend(why)
                        if reasons:
                            failures += 1
                            example = example or f"{case.conjecture_tag} ({tau.id},{b}) c={c}: {reasons[0]}"
        return cases, failures, example

    def check_sign_identities(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        for ab in range(1, self.bounds['sign_ab'] + 1):
            for a in (x for x in range(1, ab + 1) if ab % x == 0):
                b = ab // a
                for kappa_a in (1, -1):
                    cases += 1
                    eta_tau = kappa_a * parity_sign(a - 1)
                    if kappa_ab(kappa_a, a, b) * parity_sign(ab - 1) != eta_tau * parity_sign(b - 1):
                        failures += 1
                        example = example or f"kappa_ab identity at a={a}, b={b}, kappa_a={kappa_a}"
                    if kappa_of(eta_tau, a) != kappa_a:
                        failures += 1
                        example = example or f"kappa_of inverse at a={a}, kappa_a={kappa_a}"

        limit = self.bounds['unitary_mv']
        for a in range(2, limit + 1):
            for c in range(1, limit // a + 1):
                for b in range(0, limit // a - c + 1):
                    for kappa in (1, -1):
                        m_v = a * (b + c)
                        eta = kappa * parity_sign(m_v - 1) * parity_sign(b + c - 1)
                        tau = CuspidalDatum(id='u', a=a, base=Base.QUADRATIC_EXT, eta=eta)
                        try:
                            case = compile_case(GroupFamily.U, tau, b, c, kappa=kappa, quiet=True)
                        except DomainError:
                            continue
                        cases += 1
                        E = case.endoscopy
                        ok, why = validate(E)
                        if not ok or E.sign_convention != ABSOLUTE or E.signs[0] != kappa * parity_sign(c):
                            failures += 1
                            example = example or f"unitary signs a={a}, c={c}, m_V={m_v}: {why}"

        for N in range(1, self.bounds['max_N'] + 1):
            for E in enumerate_elliptic(GroupDatum(GroupFamily.U, N)):
                cases += 1
                ok, why = validate(E)
                if not ok or E.signs[0] * E.signs[1] != parity_sign(N):
                    failures += 1
                    example = example or f"U({N}) {E.describe()}: {why}"
        return cases, failures, example

    def check_beta_grammar(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        for family in NormalizerFamily:
            cases += 1
            if rho_pair(family) != EXPECTED_RHO[family]:
                failures += 1
                example = example or f"rho pair for {family.value}"
            rho, rho_minus = EXPECTED_RHO[family]
            for b in range(1, self.bounds['beta_b'] + 1):
                cases += 1
                factors = beta_factors(family, b)
                expected = [(FactorKind.RANKIN_SELBERG, 1, Fraction(b + 1, 2), None)]
                expected += [(FactorKind.RHO, 2, Fraction(b + 2 - 2 * i), rho) for i in range(1, (b + 1) // 2 + 1)]
                expected += [(FactorKind.RHO_MINUS, 2, Fraction(b + 1 - 2 * i), rho_minus)
                             for i in range(1, b // 2 + 1)]
                got = [(f.kind, f.slope, f.intercept, f.rho_name) for f in factors]
                if len(factors) != b + 1 or got != expected:
                    failures += 1
                    example = example or f"beta factors for {family.value}, b={b}"
        return cases, failures, example

    def check_x_plus(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        tops = {PoleCase.CASE_1: 0, PoleCase.CASE_2: -2, PoleCase.CASE_3: 1, PoleCase.CASE_4: -1}
        for b in range(1, self.bounds['poles_b'] + 1):
            for case, shift in tops.items():
                cases += 1
                top = Fraction(b + shift, 2)
                expected = [top - k for k in range(int(top) + 1) if top - k > 0]
                annotated = [{'s0': s, 'square_integrable': not (case == PoleCase.CASE_3 and s == Fraction(b - 1, 2))}
                             for s in expected if s <= Fraction(b + 1, 2)]
                if x_plus(b, case) != expected or residual_points(b, case) != annotated:
                    failures += 1
                    example = example or f"x_plus b={b} case {int(case)}"
            if not set(x_plus(b, PoleCase.CASE_2)) <= set(x_plus(b, PoleCase.CASE_1)) \
                    or not set(x_plus(b, PoleCase.CASE_4)) <= set(x_plus(b, PoleCase.CASE_3)):
                failures += 1
                example = example or f"x_plus nesting at b={b}"
        return cases, failures, example

    def _elliptic_parameters(self, limit: int) -> Iterator[ArthurParameter]:
        simples = [SimpleParameter(tau, b) for tau in self.pool.values()
                   for b in range(1, limit // tau.a + 1)]
        for k in range(1, self.bounds['max_summands'] + 1):
            for combo in combinations(simples, k):
                if sum(sp.size for sp in combo) <= limit:
                    yield ArthurParameter(combo)

    def check_jordan_round_trip(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        for psi in self._elliptic_parameters(self.bounds['jordan_N']):
            try:
                if not classify(psi):
                    continue
            except DomainError:
                continue
            cases += 1
            dims = {tau.id: tau.a for tau in psi.taus()}
            try:
                back = reconstruct(pole_profile(psi), dims, psi.N)
            except DomainError as e:
                back, reason = None, str(e)
            else:
                reason = f"got {back}"
            if back != psi:
                failures += 1
                example = example or f"{psi}: {reason}"
        return cases, failures, example

    def check_endoscopy_sweep(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        limit = self.bounds['max_N']
        for family in GroupFamily:
            for rank in range(0, limit + 1):
                G = GroupDatum(family, rank)
                if G.twisted_size > limit or G.twisted_size == 0:
                    continue
                for E in enumerate_elliptic(G):
                    cases += 1
                    ok, why = validate(E)
                    if not ok:
                        failures += 1
                        example = example or f"{E.describe()}: {why[0]}"
        return cases, failures, example

    def _unitary_simples(self, limit: int) -> List[SimpleParameter]:
        taus = [CuspidalDatum(id=f"e{a}{'+' if eta > 0 else '-'}", a=a, base=Base.QUADRATIC_EXT, eta=eta)
                for a in (1, 2) for eta in (1, -1)]
        return [SimpleParameter(tau, b) for tau in taus for b in range(1, limit // tau.a + 1)]

    def check_decompose_sweep(self) -> CheckResult:
        cases, failures, example = 0, 0, ''
        limit = self.bounds['max_N']
        plain = list(self._elliptic_parameters(limit))
        unitary = [ArthurParameter(combo)
                   for k in range(1, self.bounds['max_summands'] + 1)
                   for combo in combinations(self._unitary_simples(limit), k)
                   if sum(sp.size for sp in combo) <= limit]
        for psi in plain + unitary:
            try:
                groups = classify(psi)
            except DomainError:
                continue
            for G in groups:
                for sp in psi:
                    cases += 1
                    try:
                        ok, why = validate(elliptic_decompose(G, sp, boxminus(psi, sp)))
                    except DomainError as e:
                        ok, why = False, [str(e)]
                    if not ok:
                        failures += 1
                        example = example or f"{G.label} split ({sp.tau.id},{sp.b}) of {psi}: {why[0]}"
        return cases, failures, example

    def run(self) -> pd.DataFrame:
        rows = []
        for name, check in self.checks:
            logger.info(f"Running audit check {name}")
            cases, failures, example = check()
            if failures:
                logger.warning(f"{name}: {failures} of {cases} cases failed")
            rows.append({'check': name, 'cases': cases, 'failures': failures, 'example': example})
        return pd.DataFrame(rows, columns=['check', 'cases', 'failures', 'example'])

    def summary(self, df: pd.DataFrame) -> Dict:
        return {
            'config': self.settings.source or 'defaults',
            'bounds': dict(sorted(self.bounds.items())),
            'checks': [{'check': row['check'], 'cases': int(row['cases']), 'failures': int(row['failures']),
                        'example': row['example']} for row in df.to_dict('records')],
            'total_cases': int(df['cases'].sum()),
            'total_failures': int(df['failures'].sum()),
            'ok': bool(df['failures'].sum() == 0),
        }

    def render_text(self, df: pd.DataFrame) -> str:
        template = Template(TEXT_TEMPLATE)
        return template.render(
            source=self.settings.source or 'defaults',
            table=df[['check', 'cases', 'failures']].to_string(index=False),
            checks=len(df),
            cases=int(df['cases'].sum()),
            failures=int(df['failures'].sum()),
            failed=df[df['failures'] > 0].to_dict('records'),
        )
