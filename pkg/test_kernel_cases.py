import pytest

from src.errors import DomainError
from src.kernel_cases import (
    DESCENT_CHAIN, METAPLECTIC_TOWER, ORTHOGONAL_TOWER, KernelCaseCompiler, Tower, basic_triangles,
    build_tower, compile_case, to_dot, tower
)
from src.orbits import CoefficientKind
from src.parameters import (
    ArthurParameter, CuspidalDatum, Duality, GroupDatum, GroupFamily, TRIVIAL, classifies_into
)

SP, MP, SO_ODD, SO_EVEN, U = (GroupFamily.SP, GroupFamily.MP, GroupFamily.SO_ODD,
                              GroupFamily.SO_EVEN, GroupFamily.U)


class TestCompile:
    def test_symplectic_bessel(self, tau2):
        case = compile_case("Sp", tau2, 2, 2)
        assert case.ambient.label == "Sp(4)" and case.ambient.defining_size == 8
        assert case.psi0 == ArthurParameter.of((tau2, 4), (TRIVIAL, 1))
        assert case.coefficient == CoefficientKind.BESSEL
        left, right = case.endoscopy.factors
        assert (left.family, left.defining_size) == (SO_EVEN, 4)
        assert (right.family, right.defining_size) == (SP, 2)
        assert case.target.defining_size == 6
        assert case.conjecture_tag == "Sp/a-even/c-even"
        assert case.satisfied

    def test_even_orthogonal_fourier_jacobi(self):
        tau = CuspidalDatum(id='t', a=3, duality=Duality.ORTHOGONAL)
        case = compile_case("SOeven", tau, 1, 2)
        assert case.ambient.family == SO_EVEN and case.ambient.defining_size == 10
        assert case.psi0.N == 10
        assert [sp.key() for sp in case.psi0] == [('chi', 1), ('t', 3)]
        assert [f.label for f in case.endoscopy.factors] == ["Sp(1)", "Sp(1)"]
        assert case.target.defining_size == 6
        assert case.endoscopy.twisted
        assert case.coefficient == CoefficientKind.FOURIER_JACOBI
        assert case.satisfied

    def test_unitary_signs(self, tau_e):
        case = compile_case("U", tau_e, 1, 1, kappa=1)
        assert case.ambient.rank == 4
        assert case.endoscopy.signs == (-1, 1)
        assert case.target == GroupDatum(U, 3, kappa=1)
        assert ('eta_(tau,b+c) = kappa(-1)^(m_V-1)', False) in case.constraints
        assert not case.satisfied

    def test_unitary_sign_constraint_holds_for_opposite_kappa(self, tau_e):
        case = compile_case("U", tau_e, 1, 1, kappa=-1)
        assert case.endoscopy.signs == (1, -1)
        assert case.target == GroupDatum(U, 3, kappa=-1)
        assert ('eta_(tau,b+c) = kappa(-1)^(m_V-1)', True) in case.constraints
        assert case.satisfied

    def test_unitary_extended_adds_character(self, tau_e):
        case = compile_case("U", tau_e, 1, 1, kappa=-1, extended=True)
        assert case.ambient.rank == 5
        assert case.psi0.N == 5
        assert 'chi' in [tau.id for tau in case.psi0.taus()]

    def test_parity_failure_is_flagged(self, tau3):
        case = compile_case("Sp", tau3, 2, 2)
        assert not case.satisfied
        assert ('b odd for orthogonal tau', False) in case.constraints

    def test_metaplectic_needs_central_value(self):
        tau = CuspidalDatum(id='s', a=2, duality=Duality.SYMPLECTIC)
        case = compile_case("Mp", tau, 1, 2)
        assert ('central value nonvanishing', False) in case.constraints
        assert len(case.endoscopy.alternatives) == 1

    def test_identity_transfer(self, tau2):
        case = compile_case("Sp", tau2, 0, 2)
        assert case.identity_transfer
        assert case.psi0 == ArthurParameter.of((tau2, 2), (TRIVIAL, 1))

    def test_identity_transfer_log_level(self, tau2, log_records):
        compile_case("Sp", tau2, 0, 2)
        compile_case("Sp", tau2, 0, 2, quiet=True)
        levels = [r['level'].name for r in log_records if 'identity transfer' in r['message']]
        assert levels == ['WARNING', 'DEBUG']

    def test_undefined_cell(self, tau2):
        with pytest.raises(DomainError, match="case not constructed"):
            compile_case("SOodd", tau2, 1, 2)

    @pytest.mark.parametrize("b, c, a", [(1, 0, 2), (-1, 2, 2), (1, 2, 1)])
    def test_argument_errors(self, b, c, a):
        tau = CuspidalDatum(id='t', a=a, duality=Duality.ORTHOGONAL)
        with pytest.raises(DomainError):
            compile_case("Sp", tau, b, c)

    def test_unitary_needs_extension_datum(self, tau2):
        with pytest.raises(DomainError):
            compile_case("U", tau2, 1, 1)

    def test_satisfied_cases_classify(self):
        compiler = KernelCaseCompiler()
        taus = [CuspidalDatum(id=f'o{a}', a=a, duality=Duality.ORTHOGONAL) for a in (2, 3, 4)]
        taus += [CuspidalDatum(id=f's{a}', a=a, duality=Duality.SYMPLECTIC, central_nonvanishing=True)
                 for a in (2, 4)]
        checked = 0
        for (family, a_parity, c_parity) in compiler.cells:
            for tau in taus:
                if tau.a % 2 != a_parity:
                    continue
                for b in range(1, 4):
                    for c in range(1, 5):
                        if c % 2 != c_parity:
                            continue
                        case = compiler.compile(family, tau, b, c)
                        if case.satisfied:
                            checked += 1
                            assert classifies_into(case.psi0, case.ambient), case.conjecture_tag
                            assert case.r == case.ambient.defining_size - c * case.d
        assert checked > 0


class TestTowers:
    def test_descent_chain_ascent(self, tau2):
        nodes = tower(GroupDatum(MP, 1), ArthurParameter.of((tau2, 1)), tau2, 1)
        assert len(nodes) == 1
        assert nodes[0].group == GroupDatum(SP, 2)
        assert nodes[0].parameter == ArthurParameter.of((tau2, 2), (TRIVIAL, 1))

    def test_descent_chain_shape(self, tau2):
        built = build_tower(GroupDatum(MP, 1), ArthurParameter.of((tau2, 1)), tau2, 3)
        assert built.shape == DESCENT_CHAIN
        assert [n.group.family for n in built] == [SP, MP, SP]

    def test_descent_chain_needs_central_value(self):
        tau = CuspidalDatum(id='s', a=2, duality=Duality.SYMPLECTIC)
        with pytest.raises(DomainError):
            build_tower(GroupDatum(MP, 1), ArthurParameter.of((tau, 1)), tau, 1)

    def test_orthogonal_ascending_only(self, tau1, tau3):
        base_psi = ArthurParameter.of((TRIVIAL, 1), (tau1, 1))
        built = build_tower(GroupDatum(SO_EVEN, 1), base_psi, tau3, 2)
        assert built.shape == ORTHOGONAL_TOWER
        assert [n.level_b for n in built] == [1, 3]
        assert [n.group.defining_size for n in built] == [4, 8]
        assert built.nodes[1].parameter == ArthurParameter.of((TRIVIAL, 1), (tau1, 1), (tau3, 3))

    def test_orthogonal_descends(self, tau1, tau3):
        base_psi = ArthurParameter.of((TRIVIAL, 1), (tau1, 1), (tau3, 1))
        built = build_tower(GroupDatum(SO_EVEN, 2), base_psi, tau3, 1)
        assert [n.level_b for n in built] == [-1, 1]
        assert built.nodes[0].group.defining_size == 2
        assert built.nodes[0].parameter == ArthurParameter.of((TRIVIAL, 1), (tau1, 1))
        assert built.nodes[0].annotation == "⊟(tau3,1)"

    def test_metaplectic_tower(self, tau1):
        base_psi = ArthurParameter.of((tau1, 2))
        built = build_tower(GroupDatum(SO_ODD, 1), base_psi, tau1, 3)
        assert built.shape == METAPLECTIC_TOWER
        assert [n.level_b for n in built] == [-2, 0, 2, 4]
        assert [n.group for n in built] == [GroupDatum(MP, r) for r in (0, 1, 2, 3)]
        assert built.nodes[0].parameter == ArthurParameter()

    def test_no_shape(self, tau1):
        with pytest.raises(DomainError) as info:
            build_tower(GroupDatum(SP, 1), ArthurParameter.of((tau1, 3)), tau1, 1)
        assert info.value.code == "no_tower_shape"

    def test_size_mismatch(self, tau3):
        with pytest.raises(DomainError):
            build_tower(GroupDatum(SO_EVEN, 3), ArthurParameter.of((tau3, 1)), tau3, 1)


class TestTriangles:
    def test_level_one(self, tau2):
        record = basic_triangles(tau2, 1)
        assert [v.group for v in record.basic.vertices] == [
            GroupDatum(SP, 4), GroupDatum(MP, 3), GroupDatum(SP, 2)]
        assert [v.group.defining_size for v in record.basic.vertices] == [8, 6, 4]
        assert record.dual is not None
        assert [v.group for v in record.dual.vertices] == [
            GroupDatum(MP, 3), GroupDatum(SP, 2), GroupDatum(MP, 1)]

    def test_level_zero(self, tau2):
        record = basic_triangles(tau2, 0)
        assert [v.group for v in record.basic.vertices] == [
            GroupDatum(SP, 2), GroupDatum(MP, 1), GroupDatum(SP, 0)]
        assert record.basic.vertices[2].parameter == ArthurParameter.of((TRIVIAL, 1))
        assert record.dual is None

    def test_hypotheses(self, tau3):
        with pytest.raises(DomainError):
            basic_triangles(tau3, 1)
        with pytest.raises(DomainError):
            basic_triangles(CuspidalDatum(id='s', a=2, duality=Duality.SYMPLECTIC), 1)


class TestDot:
    def test_empty_tower(self, tau3):
        text = to_dot(Tower(GroupDatum(SO_EVEN, 1), ArthurParameter(), tau3, ORTHOGONAL_TOWER))
        assert text.startswith("digraph")
        assert "[label=" not in text

    def test_three_node_tower(self, tau2):
        built = build_tower(GroupDatum(MP, 1), ArthurParameter.of((tau2, 1)), tau2, 3)
        text = to_dot(built)
        assert text.count("[label=") == 5
        assert text.count(" -> ") == 2

    def test_triangle(self, tau2):
        text = to_dot(basic_triangles(tau2, 0))
        assert text.count(" -> ") == 3
        for label in ('"FJ"', '"LFT"', '"RES"'):
            assert label in text

    def test_deterministic(self, tau2):
        assert to_dot(basic_triangles(tau2, 2)) == to_dot(basic_triangles(tau2, 2))

    def test_rejects_other_objects(self):
        with pytest.raises(DomainError):
            to_dot([1, 2])
