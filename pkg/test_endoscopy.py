from itertools import combinations

import pytest

from src.endoscopy import (
    ABSOLUTE, EndoscopyDatum, elliptic_decompose, enumerate_elliptic, validate
)
from src.errors import DomainError
from src.parameters import (
    ArthurParameter, Base, CharacterLabel, CuspidalDatum, GroupDatum, GroupFamily, SimpleParameter,
    TRIVIAL, boxminus, classify, parity_sign
)

SO_ODD, SP, SO_EVEN, MP, U = (GroupFamily.SO_ODD, GroupFamily.SP, GroupFamily.SO_EVEN,
                              GroupFamily.MP, GroupFamily.U)


def labels(E):
    return tuple(g.label for g in E.factors)


class TestDecompose:
    def test_symplectic_even_a(self, tau2):
        E = elliptic_decompose(GroupDatum(SP, 3), SimpleParameter(tau2, 2), ArthurParameter.of((TRIVIAL, 3)))
        assert labels(E) == ('SOeven(2)', 'Sp(1)')
        assert validate(E) == (True, [])

    def test_symplectic_odd_a(self, tau3):
        tau = CuspidalDatum(id='t', a=3)
        E = elliptic_decompose(GroupDatum(SP, 4), SimpleParameter(tau, 1), ArthurParameter.of((tau3, 3)))
        assert labels(E) == ('Sp(1)', 'SOeven(3)')
        assert E.factors[1].eta == CharacterLabel.of('omega_tau3')
        assert validate(E)[0]

    def test_odd_orthogonal_with_variants(self, tau2):
        E = elliptic_decompose(GroupDatum(SO_ODD, 4), SimpleParameter(tau2, 3), ArthurParameter.of((tau2, 1)))
        assert labels(E) == ('SOodd(3)', 'SOodd(1)')
        assert E.alternatives
        assert all(alt.variant == 'Mp' for alt in E.alternatives)
        assert all(validate(alt)[0] for alt in E.alternatives)

    def test_even_orthogonal_twisted(self, tau1):
        tau = CuspidalDatum(id='t', a=3)
        G = GroupDatum(SO_EVEN, 2, eta=CharacterLabel.of('omega_t', 'omega_tau1'))
        E = elliptic_decompose(G, SimpleParameter(tau, 1), ArthurParameter.of((tau1, 1)))
        assert E.twisted
        assert labels(E) == ('Sp(1)', 'Sp(0)')
        assert validate(E)[0]

    def test_unitary_odd_rank(self):
        tau = CuspidalDatum(id='t', a=2, base=Base.QUADRATIC_EXT, eta=1)
        chi = CuspidalDatum(id='chi', a=1, base=Base.QUADRATIC_EXT, eta=1, is_character=True)
        E = elliptic_decompose(GroupDatum(U, 5, kappa=1), SimpleParameter(tau, 1), ArthurParameter.of((chi, 3)))
        assert E.signs == (-1, 1)
        assert labels(E) == ('U(2,-)', 'U(3,+)')
        assert validate(E)[0]

    def test_parity_rule_named(self, tau2):
        with pytest.raises(DomainError, match="parity rule"):
            elliptic_decompose(GroupDatum(SP, 2), SimpleParameter(tau2, 1), ArthurParameter.of((TRIVIAL, 3)))

    def test_size_mismatch(self, tau2):
        with pytest.raises(DomainError):
            elliptic_decompose(GroupDatum(SP, 4), SimpleParameter(tau2, 2), ArthurParameter.of((TRIVIAL, 1)))

    def test_every_split_of_a_classified_parameter(self, tau1, tau2, tau3):
        simples = [SimpleParameter(tau, b) for tau in (tau1, tau2, tau3) for b in range(1, 7)]
        checked = 0
        for k in (1, 2, 3):
            for combo in combinations(simples, k):
                psi = ArthurParameter(combo)
                if psi.N > 12:
                    continue
                for G in classify(psi):
                    for sp in psi:
                        E = elliptic_decompose(G, sp, boxminus(psi, sp))
                        assert validate(E) == (True, []), (psi, G, sp)
                        checked += 1
        assert checked > 100


class TestEnumerate:
    def test_even_orthogonal(self):
        data = enumerate_elliptic(GroupDatum(SO_EVEN, 2))
        standard = [E for E in data if not E.twisted]
        twisted = [E for E in data if E.twisted]
        assert [labels(E) for E in standard] == [('SOeven(0)', 'SOeven(2)'), ('SOeven(1)', 'SOeven(1)')]
        assert [labels(E) for E in twisted] == [('Sp(0)', 'Sp(1)')]

    def test_unitary_signs(self):
        data = enumerate_elliptic(GroupDatum(U, 2, kappa=1))
        assert [(E.factors[0].rank, E.factors[1].rank, E.signs) for E in data] == [
            (0, 2, (1, 1)), (1, 1, (-1, -1))]

    @pytest.mark.parametrize("N", range(1, 21))
    def test_unitary_sign_product(self, N):
        for E in enumerate_elliptic(GroupDatum(U, N)):
            assert E.signs[0] * E.signs[1] == parity_sign(N)
            assert validate(E)[0]

    @pytest.mark.parametrize("family", list(GroupFamily))
    def test_all_families_validate(self, family):
        for rank in range(0, 7):
            G = GroupDatum(family, rank)
            for E in enumerate_elliptic(G):
                assert validate(E)[0], E.describe()


class TestValidate:
    def test_symplectic_pair_is_not_a_shape(self):
        E = EndoscopyDatum(GroupDatum(SP, 2), (GroupDatum(SP, 1), GroupDatum(SP, 1)))
        ok, reasons = validate(E)
        assert not ok
        assert reasons

    def test_unitary_sign_violation(self):
        E = EndoscopyDatum(GroupDatum(U, 3), (GroupDatum(U, 1), GroupDatum(U, 2)), signs=(1, 1))
        assert not validate(E)[0]

    def test_absolute_convention(self):
        target = GroupDatum(U, 3, kappa=-1)
        good = EndoscopyDatum(target, (GroupDatum(U, 1), GroupDatum(U, 2)), signs=(-1, 1),
                              sign_convention=ABSOLUTE)
        assert validate(good)[0]

    def test_eta_product(self):
        G = GroupDatum(SO_EVEN, 2, eta=CharacterLabel.of('x'))
        bad = EndoscopyDatum(G, (GroupDatum(SO_EVEN, 1), GroupDatum(SO_EVEN, 1)),
                             eta_pair=(CharacterLabel.of('y'), CharacterLabel()))
        assert not validate(bad)[0]
