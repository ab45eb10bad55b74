from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from loguru import logger

from ..endoscopy import ABSOLUTE, EndoscopyDatum
from ..errors import DomainError
from ..orbits import CoefficientKind, coefficient_kind, orbit_family_of, stabilizer
from ..parameters import (
    ArthurParameter, Base, CharacterLabel, CuspidalDatum, Duality, GroupDatum, GroupFamily,
    SimpleParameter, TRIVIAL, eta_of, eta_of_simple, parity_sign, sign_of_simple
)
from ..partitions import Partition, is_valid

SO_ODD, SP, SO_EVEN, MP, U = (GroupFamily.SO_ODD, GroupFamily.SP, GroupFamily.SO_EVEN,
                              GroupFamily.MP, GroupFamily.U)

BESSEL = CoefficientKind.BESSEL
FJ = CoefficientKind.FOURIER_JACOBI

Constraint = Tuple[str, bool]


@dataclass(frozen=True)
class ConstructionCase:
    """Everything the kernel construction for (target, tau, b, c) pins down."""
    target: GroupDatum
    tau: CuspidalDatum
    a: int
    b: int
    c: int
    d: int
    ambient: GroupDatum
    psi0: ArthurParameter
    coefficient: CoefficientKind
    endoscopy: EndoscopyDatum
    conjecture_tag: str
    constraints: Tuple[Constraint, ...]
    partition: Partition
    stabilizer: Optional[Tuple[GroupDatum, GroupDatum]] = None
    identity_transfer: bool = False

    @property
    def satisfied(self) -> bool:
        return all(ok for _, ok in self.constraints)

    @property
    def r(self) -> int:
        return self.ambient.defining_size - self.c * self.d


def _b_parity(tau: CuspidalDatum, b: int, symplectic_even: bool) -> Constraint:
    """tau symplectic => b even (or odd), tau orthogonal => the other parity."""
    if tau.duality == Duality.SYMPLECTIC:
        want_even = symplectic_even
    else:
        want_even = not symplectic_even
    name = f"b {'even' if want_even else 'odd'} for {tau.duality.value.lower()} tau"
    return (name, (b % 2 == 0) == want_even)


def _odd_tau(tau: CuspidalDatum, b: int, b_even: bool) -> List[Constraint]:
    return [
        ('tau orthogonal', tau.duality == Duality.ORTHOGONAL),
        (f"b {'even' if b_even else 'odd'}", (b % 2 == 0) == b_even),
    ]


class KernelCaseCompiler:
    """Dispatch table from (target family, a parity, c parity) to construction records."""

    def __init__(self):
        self.cells: Dict[Tuple[GroupFamily, int, int], Callable] = {
            (SP, 0, 0): self._symplectic_bessel,
            (SO_ODD, 0, 1): self._odd_orthogonal_bessel,
            (SO_EVEN, 0, 0): self._even_orthogonal_bessel,
            (MP, 0, 0): self._metaplectic_bessel,
            (SP, 1, 0): self._symplectic_fourier_jacobi,
            (MP, 1, 1): self._metaplectic_fourier_jacobi,
            (SO_EVEN, 1, 0): self._even_orthogonal_fourier_jacobi,
            (SO_ODD, 1, 0): self._odd_orthogonal_fourier_jacobi,
        }
        self.default_chi = CuspidalDatum(id='chi', a=1, is_character=True)

    def compile(self, target_family, tau: CuspidalDatum, b: int, c: int, kappa: int = 1,
                extended: bool = False, chi: Optional[CuspidalDatum] = None,
                quiet: bool = False) -> ConstructionCase:
        family = target_family if isinstance(target_family, GroupFamily) else GroupFamily.parse(target_family)
        if not tau.is_self_dual:
            raise DomainError(f"{tau.id} is not self-dual", code="not_self_dual")
        if b < 0:
            raise DomainError(f"b must be non-negative, got {b}", code="invalid_parameter")
        if c < 1:
            raise DomainError(f"c must be at least 1, got {c}", code="invalid_parameter")
        if tau.a < 2:
            raise DomainError(f"d = a - 1 must be positive, got a = {tau.a}", code="out_of_range")

        if family == U:
            if tau.base != Base.QUADRATIC_EXT:
                raise DomainError("unitary constructions need a conjugate self-dual tau over E",
                                  code="invalid_tau")
            if kappa not in (1, -1):
                raise DomainError(f"kappa must be +1 or -1, got {kappa}", code="invalid_sign")
            case = self._unitary(tau, b, c, kappa, extended, chi)
        else:
            if tau.base != Base.PLAIN:
                raise DomainError(f"{family.value} constructions need a self-dual tau over F",
                                  code="invalid_tau")
            cell = self.cells.get((family, tau.a % 2, c % 2))
            if cell is None:
                raise DomainError(
                    f"case not constructed: {family.value} target with a "
                    f"{'even' if tau.a % 2 == 0 else 'odd'} and c {'even' if c % 2 == 0 else 'odd'}",
                    code="case_not_constructed")
            case = cell(tau, b, c, chi or self.default_chi)

        if case.identity_transfer:
            level = "DEBUG" if quiet else "WARNING"
            logger.log(level, f"{case.conjecture_tag}: b = 0 is the identity transfer")
        logger.debug(f"compiled {case.conjecture_tag} for ({tau.id},{b}), c={c}: "
                     f"ambient {case.ambient.label}, {case.endoscopy.describe()}")
        return case

    def _record(self, target: GroupDatum, tau: CuspidalDatum, b: int, c: int, ambient: GroupDatum,
                psi0: ArthurParameter, declared: CoefficientKind, endoscopy: EndoscopyDatum,
                tag: str, constraints: List[Constraint]) -> ConstructionCase:
        a, d = tau.a, tau.a - 1
        r = ambient.defining_size - c * d
        if r < 0:
            raise DomainError(f"{tag}: ambient {ambient.label} too small for [{d}^{c}]",
                              code="out_of_range")
        partition = Partition.of([d] * c + [1] * r)
        fam = orbit_family_of(ambient.family)
        coefficient, stab = declared, None
        if r >= 1 and is_valid(partition, fam):
            coefficient = coefficient_kind(ambient.family, d, c, r)
            stab = stabilizer(ambient.family, ambient.defining_size, d, c)
        else:
            constraints = constraints + [(f"ambient partition {partition} valid", False)]
        constraints = constraints + [('coefficient kind as tabulated', coefficient == declared)]
        return ConstructionCase(
            target=target, tau=tau, a=a, b=b, c=c, d=d, ambient=ambient, psi0=psi0,
            coefficient=coefficient, endoscopy=endoscopy, conjecture_tag=tag,
            constraints=tuple(constraints), partition=partition, stabilizer=stab,
            identity_transfer=(b == 0))

    @staticmethod
    def _psi0(tau: CuspidalDatum, b: int, c: int, *extra: SimpleParameter) -> ArthurParameter:
        return ArthurParameter((SimpleParameter(tau, b + c),) + extra)

    def _symplectic_bessel(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        eta0 = eta_of_simple(SimpleParameter(tau, b)) if b else CharacterLabel()
        target = GroupDatum(SP, (ab + c) // 2)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SO_EVEN, ab // 2, eta=eta0), GroupDatum(SP, c // 2)),
            conjecture_basis="Sp:a-even:c-even")
        return self._record(
            target, tau, b, c, GroupDatum(SP, a * (b + c) // 2),
            self._psi0(tau, b, c, SimpleParameter(TRIVIAL, 1)), BESSEL, endoscopy,
            "Sp/a-even/c-even", [_b_parity(tau, b, symplectic_even=True)])

    def _odd_orthogonal_bessel(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        target = GroupDatum(SO_ODD, (ab + c - 1) // 2)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SO_ODD, ab // 2), GroupDatum(SO_ODD, (c - 1) // 2)),
            conjecture_basis="SOodd:a-even:c-odd")
        psi0 = self._psi0(tau, b, c)
        return self._record(
            target, tau, b, c, GroupDatum(SO_EVEN, a * (b + c) // 2, eta=eta_of(psi0)),
            psi0, BESSEL, endoscopy, "SOodd/a-even/c-odd",
            [_b_parity(tau, b, symplectic_even=False)])

    def _even_orthogonal_bessel(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        psi0 = self._psi0(tau, b, c)
        eta_q0 = eta_of_simple(SimpleParameter(tau, b)) if b else CharacterLabel()
        eta_qd = CharacterLabel.of('eta_qd')
        target = GroupDatum(SO_EVEN, (ab + c) // 2, eta=eta_q0 * eta_qd)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SO_EVEN, ab // 2, eta=eta_q0), GroupDatum(SO_EVEN, c // 2, eta=eta_qd)),
            eta_pair=(eta_q0, eta_qd), conjecture_basis="SOeven:a-even:c-even")
        eta_qv = eta_of(psi0)
        return self._record(
            target, tau, b, c, GroupDatum(SO_EVEN, a * (b + c) // 2, eta=eta_qv), psi0, BESSEL,
            endoscopy, "SOeven/a-even/c-even",
            [_b_parity(tau, b, symplectic_even=True), ('eta_qV = eta_q0', eta_qv == eta_q0)])

    def _metaplectic_bessel(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        target = GroupDatum(MP, (ab + c) // 2)
        variant = EndoscopyDatum(target, (GroupDatum(MP, ab // 2), GroupDatum(MP, c // 2)),
                                 conjecture_basis="Mp:a-even:c-even:metaplectic-pair", variant='Mp')
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SO_ODD, ab // 2), GroupDatum(MP, c // 2)),
            conjecture_basis="Mp:a-even:c-even", variant='Mp', alternatives=(variant,))
        constraints = [_b_parity(tau, b, symplectic_even=False)]
        if tau.duality == Duality.SYMPLECTIC:
            constraints.append(('central value nonvanishing', tau.central_nonvanishing is True))
        return self._record(
            target, tau, b, c, GroupDatum(MP, a * (b + c) // 2), self._psi0(tau, b, c), BESSEL,
            endoscopy, "Mp/a-even/c-even", constraints)

    def _symplectic_fourier_jacobi(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        target = GroupDatum(SP, (ab + c - 1) // 2)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SP, (ab - 1) // 2), GroupDatum(SO_EVEN, c // 2, eta=CharacterLabel.of('eta_qd'))),
            conjecture_basis="Sp:a-odd:c-even")
        return self._record(
            target, tau, b, c, GroupDatum(SP, (a * (b + c) - 1) // 2), self._psi0(tau, b, c), FJ,
            endoscopy, "Sp/a-odd/c-even", _odd_tau(tau, b, b_even=False))

    def _metaplectic_fourier_jacobi(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        target = GroupDatum(MP, (ab + c - 1) // 2)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SO_ODD, ab // 2), GroupDatum(SO_ODD, (c - 1) // 2)),
            conjecture_basis="Mp:a-odd:c-odd", variant='Mp')
        return self._record(
            target, tau, b, c, GroupDatum(SP, (a * (b + c) - 1) // 2), self._psi0(tau, b, c), FJ,
            endoscopy, "Mp/a-odd/c-odd", _odd_tau(tau, b, b_even=True))

    def _even_orthogonal_fourier_jacobi(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        psi0 = self._psi0(tau, b, c, SimpleParameter(chi, 1))
        eta_v = CharacterLabel.of('eta_V')
        eta1 = eta_of_simple(SimpleParameter(tau, b)) if b else CharacterLabel()
        target = GroupDatum(SO_EVEN, (ab + c + 1) // 2, eta=eta_v)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(SP, (ab - 1) // 2), GroupDatum(SP, c // 2)),
            eta_pair=(eta1, eta_v * eta1), conjecture_basis="SOeven:a-odd:c-even", twisted=True)
        constraints = _odd_tau(tau, b, b_even=False)
        constraints.append(('chi orthogonal character',
                            chi.is_character and chi.base == Base.PLAIN and chi.duality == Duality.ORTHOGONAL))
        return self._record(
            target, tau, b, c, GroupDatum(SO_EVEN, (a * (b + c) + 1) // 2, eta=eta_of(psi0)), psi0, FJ,
            endoscopy, "SOeven/a-odd/c-even", constraints)

    def _odd_orthogonal_fourier_jacobi(self, tau, b, c, chi):
        a = tau.a
        ab = a * b
        target = GroupDatum(SO_ODD, (ab + c) // 2)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(MP, ab // 2), GroupDatum(MP, c // 2)),
            conjecture_basis="SOodd:a-odd:c-even", variant='Mp')
        return self._record(
            target, tau, b, c, GroupDatum(SO_ODD, a * (b + c) // 2), self._psi0(tau, b, c), FJ,
            endoscopy, "SOodd/a-odd/c-even", _odd_tau(tau, b, b_even=True))

    def _unitary(self, tau, b, c, kappa, extended, chi):
        a, d = tau.a, tau.a - 1
        m_v = a * (b + c) + (1 if extended else 0)
        expected = kappa * parity_sign(m_v - 1)
        extra = ()
        constraints = [('eta_(tau,b+c) = kappa(-1)^(m_V-1)',
                        sign_of_simple(SimpleParameter(tau, b + c)) == expected)]
        if extended:
            chi = chi or CuspidalDatum(id='chi', a=1, base=Base.QUADRATIC_EXT, eta=expected,
                                       is_character=True)
            extra = (SimpleParameter(chi, 1),)
            constraints.append(('eta_chi = kappa(-1)^(m_V-1)', chi.eta == expected))

        signs = (kappa * parity_sign(c), kappa * parity_sign(m_v - a * c))
        target = GroupDatum(U, m_v - d * c, kappa=kappa)
        endoscopy = EndoscopyDatum(
            target, (GroupDatum(U, m_v - a * c, kappa=signs[0]), GroupDatum(U, c, kappa=signs[1])),
            signs=signs, conjecture_basis=f"U:m_V={'a(b+c)+1' if extended else 'a(b+c)'}",
            sign_convention=ABSOLUTE)
        tag = f"U/{'extended' if extended else 'standard'}"
        declared = FJ if d % 2 == 0 else BESSEL
        return self._record(
            target, tau, b, c, GroupDatum(U, m_v, kappa=kappa), self._psi0(tau, b, c, *extra),
            declared, endoscopy, tag, constraints)


_COMPILER = KernelCaseCompiler()


def compile_case(target_family, tau: CuspidalDatum, b: int, c: int, **kwargs) -> ConstructionCase:
    return _COMPILER.compile(target_family, tau, b, c, **kwargs)
