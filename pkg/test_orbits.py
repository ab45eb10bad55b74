import pytest

from src.errors import DomainError
from src.orbits import (
    CoefficientKind, FormLabel, RationalOrbitKey, coefficient_kind, grading, hook_partition,
    lie_algebra_dim, orbit_family_of, rational_orbit_keys, stabilizer, unipotent_dims, weights_of
)
from src.parameters import GroupFamily
from src.partitions import OrbitFamily, enumerate_partitions, is_valid, parse_partition

A, B, C, D = OrbitFamily.A, OrbitFamily.B, OrbitFamily.C, OrbitFamily.D


class TestWeights:
    def test_ladders(self):
        assert sorted(weights_of(parse_partition("[2,2]"))) == [-1, -1, 1, 1]
        assert sorted(weights_of(parse_partition("[3,1,1]"))) == [-2, 0, 0, 0, 2]
        assert weights_of(parse_partition("[1^4]")) == [0, 0, 0, 0]

    def test_family_lookup(self):
        assert orbit_family_of(GroupFamily.MP) == C
        assert orbit_family_of("SOodd") == B
        assert orbit_family_of("d") == D


class TestGrading:
    def test_symplectic_two_two(self):
        g = grading(C, parse_partition("[2,2]"))
        assert g.as_dict() == {-2: 3, 0: 4, 2: 3}
        assert g.total == 10

    def test_odd_orthogonal_three_one_one(self):
        g = grading(B, parse_partition("[3,1,1]"))
        assert g.as_dict() == {-2: 3, 0: 4, 2: 3}

    def test_general_linear_zero_orbit(self):
        assert grading(A, parse_partition("[1,1]")).as_dict() == {0: 4}

    def test_invalid_partition_rejected(self):
        with pytest.raises(DomainError):
            grading(C, parse_partition("[3]"))

    @pytest.mark.parametrize("family", [A, B, C, D])
    def test_totals_and_symmetry(self, family):
        for n in range(1, 11):
            for p in enumerate_partitions(n, family):
                g = grading(family, p)
                assert g.total == lie_algebra_dim(family, n)
                for j, k in g.dims:
                    assert g.dim(-j) == k


class TestUnipotentDims:
    def test_heisenberg(self):
        dims = unipotent_dims(grading(C, parse_partition("[2,2,1,1]")))
        assert dims['dim_g1'] == 4
        assert dims['heisenberg_dim'] == 5

    def test_even_weights_have_no_g1(self):
        assert unipotent_dims(grading(B, parse_partition("[3,1,1]")))['dim_g1'] == 0

    def test_vx(self):
        assert unipotent_dims(grading(C, parse_partition("[2,2]")))['dim_VX'] == 3


class TestCoefficientKind:
    def test_examples(self):
        assert coefficient_kind(C, 3, 2, 2) == CoefficientKind.BESSEL
        assert coefficient_kind(C, 2, 2, 2) == CoefficientKind.FOURIER_JACOBI
        assert coefficient_kind(B, 2, 2, 3) == CoefficientKind.FOURIER_JACOBI

    def test_no_tail_is_degenerate(self):
        with pytest.raises(DomainError, match="degenerate: no 1-parts"):
            coefficient_kind(C, 2, 2, 0)

    @pytest.mark.parametrize("family", [A, B, C, D])
    def test_dichotomy(self, family):
        seen = 0
        for d in range(1, 25):
            for c in range(1, 25 // d + 1):
                for r in range(1, 25 - c * d):
                    p = hook_partition(d, c, r)
                    if not is_valid(p, family):
                        continue
                    seen += 1
                    g1 = grading(family, p).dim(1)
                    assert (g1 == 0) == (d % 2 == 1), (family, d, c, r)
        assert seen > 0


class TestStabilizer:
    def test_symplectic_odd_d(self):
        first, second = stabilizer(C, 10, 3, 2)
        assert (first.label, second.label) == ("Sp(1)", "Sp(2)")

    def test_odd_orthogonal(self):
        first, second = stabilizer(B, 13, 3, 2)
        assert first.family == GroupFamily.SO_EVEN and first.defining_size == 2
        assert first.form == 'q_d'
        assert second.family == GroupFamily.SO_ODD and second.defining_size == 7
        assert second.form == 'q_1'

    def test_unitary(self):
        first, second = stabilizer("U", 7, 2, 2)
        assert (first.rank, second.rank) == (2, 3)
        assert (first.form, second.form) == ('q_d', 'q_1')

    def test_metaplectic_mirrors_symplectic(self):
        first, second = stabilizer(GroupFamily.MP, 10, 3, 2)
        assert first.family == second.family == GroupFamily.MP

    def test_sizes(self):
        for family, m_size in ((C, 12), (D, 12), (B, 13), ("U", 9)):
            for d in range(1, 5):
                for c in range(1, m_size // d + 1):
                    try:
                        first, second = stabilizer(family, m_size, d, c)
                    except DomainError:
                        continue
                    assert first.defining_size == c
                    assert second.defining_size == m_size - c * d

    def test_parity_violation(self):
        with pytest.raises(DomainError, match="symplectic partitions"):
            stabilizer(C, 9, 2, 3)

    @pytest.mark.parametrize("family, d, c", [(C, 1, 1), (GroupFamily.MP, 1, 3), ("Mp", 1, 5)])
    def test_odd_block_count_with_odd_d(self, family, d, c):
        with pytest.raises(DomainError) as info:
            stabilizer(family, 12, d, c)
        assert info.value.code == "parity_rule"
        with pytest.raises(DomainError):
            rational_orbit_keys(family, d, c, 12)

    def test_trivial_orbit_splits_evenly(self):
        first, second = stabilizer(C, 12, 1, 4)
        assert (first.defining_size, second.defining_size) == (4, 8)


class TestRationalOrbitKeys:
    def test_single_symplectic_orbit(self):
        keys = rational_orbit_keys(C, 3, 2, 10)
        assert keys == [RationalOrbitKey(hook_partition(3, 2, 4))]

    def test_even_orthogonal_slots(self):
        keys = rational_orbit_keys(D, 3, 2, 10, q_d_classes=('a', 'b'), q_1_classes=('x',))
        assert len(keys) == 2
        assert all(k.q_d is not None and k.q_1 is not None for k in keys)
        assert keys[0].q_d == FormLabel(2, 'a')
        assert keys[0].q_1 == FormLabel(4, 'x')

    def test_symplectic_even_d_uses_q_d(self):
        keys = rational_orbit_keys(C, 2, 2, 8, q_d_classes=('s', 't'))
        assert [str(k.q_d) for k in keys] == ["s[2]", "t[2]"]
        assert all(k.q_1 is None for k in keys)

    def test_invalid_total(self):
        with pytest.raises(DomainError):
            rational_orbit_keys(C, 2, 3, 9)


def _matrix_grading(family, p):
    """ad(h) eigenspace dims from an explicit matrix model of the Lie algebra."""
    sympy = pytest.importorskip("sympy")
    w = weights_of(p)
    n = len(w)
    J = sympy.zeros(n, n)
    used = set()
    for i in range(n):
        if i in used:
            continue
        partner = next((k for k in range(n) if k != i and k not in used and w[k] == -w[i]), None)
        used.add(i)
        if partner is None:
            J[i, i] = 1
            continue
        used.add(partner)
        J[i, partner] = 1
        J[partner, i] = -1 if family == C else 1

    dims = {}
    for j in sorted({u - v for u in w for v in w}):
        cells = [(i, k) for i in range(n) for k in range(n) if w[i] - w[k] == j]
        xs = sympy.symbols(f"x0:{len(cells)}")
        X = sympy.zeros(n, n)
        for x, (i, k) in zip(xs, cells):
            X[i, k] = x
        eqs = [e for e in (X.T * J + J * X) if e != 0]
        rank = sympy.linear_eq_to_matrix(eqs, xs)[0].rank() if eqs else 0
        if len(cells) - rank:
            dims[j] = len(cells) - rank
    return dims


@pytest.mark.parametrize("family", [B, C, D])
def test_pair_counting_matches_matrix_model(family):
    for n in range(1, 7):
        for p in enumerate_partitions(n, family):
            assert grading(family, p).as_dict() == _matrix_grading(family, p)
