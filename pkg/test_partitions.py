import pytest

from src.errors import DomainError
from src.partitions import (
    OrbitFamily, Partition, brute_force_collapse, bv_dual, collapse, dominates,
    enumerate_partitions, is_valid, parse_partition, partitions_of, transpose
)
from src.reports import bv_golden_forms

A, B, C, D = OrbitFamily.A, OrbitFamily.B, OrbitFamily.C, OrbitFamily.D


def P(*parts):
    return Partition(tuple(parts))


class TestLiterals:
    def test_exponent_and_flat_forms_agree(self):
        assert parse_partition("[3^2,1^4]") == P(3, 3, 1, 1, 1, 1)
        assert parse_partition("[3,3,1,1,1,1]") == P(3, 3, 1, 1, 1, 1)

    def test_flat_form_is_emitted(self):
        p = parse_partition("[3^2,1^4]")
        assert str(p) == "[3,3,1,1,1,1]"
        assert p.exponent_form() == "[3^2,1^4]"

    def test_empty(self):
        assert parse_partition("[]") == Partition()
        assert Partition().total == 0

    @pytest.mark.parametrize("text", ["[3,a]", "[0]", "[2^x]"])
    def test_bad_literals(self, text):
        with pytest.raises(DomainError):
            parse_partition(text)

    def test_parts_must_decrease(self):
        with pytest.raises(DomainError):
            P(1, 2)


class TestTranspose:
    def test_examples(self):
        assert transpose(P(3, 1)) == P(2, 1, 1)
        assert transpose(P(2, 2)) == P(2, 2)
        assert transpose(Partition()) == Partition()

    def test_involution(self):
        for total in range(0, 16):
            for parts in partitions_of(total):
                p = Partition(parts)
                assert transpose(transpose(p)) == p


class TestDominance:
    def test_examples(self):
        assert dominates(P(3, 1), P(2, 2))
        assert not dominates(P(2, 2), P(3, 1))
        assert dominates(P(2, 2), P(2, 1, 1))

    def test_incomparable_totals(self):
        with pytest.raises(DomainError, match="incomparable totals"):
            dominates(P(3), P(2))


class TestValidity:
    def test_examples(self):
        assert is_valid(P(3, 1, 1), B)
        assert not is_valid(P(3, 1), C)
        assert is_valid(P(2, 2), C)
        assert is_valid(P(2, 2, 1, 1), D)
        assert not is_valid(P(2, 1, 1), D)

    def test_enumeration(self):
        assert enumerate_partitions(4, C) == [P(4), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
        assert enumerate_partitions(0, A) == [Partition()]
        assert enumerate_partitions(3, B) == [P(3), P(1, 1, 1)]


class TestCollapse:
    def test_examples(self):
        assert collapse(P(3, 2), B) == P(3, 1, 1)
        assert collapse(P(2, 2, 2), D) == P(2, 2, 1, 1)
        assert collapse(P(2, 2), C) == P(2, 2)

    def test_wrong_total_parity(self):
        with pytest.raises(DomainError):
            collapse(P(2, 2), B)

    @pytest.mark.parametrize("total", range(0, 15))
    def test_matches_brute_force(self, total):
        families = [B] if total % 2 else [C, D]
        for parts in partitions_of(total):
            p = Partition(parts)
            for fam in families:
                q = collapse(p, fam)
                assert q == brute_force_collapse(p, fam)
                assert collapse(q, fam) == q


class TestBarbaschVogan:
    def test_examples(self):
        assert bv_dual(P(2, 2), C, B) == P(3, 1, 1)
        assert bv_dual(P(3, 3, 3), B, C) == P(3, 3, 2)
        assert bv_dual(P(3, 3), D, D) == P(2, 2, 1, 1)
        assert bv_dual(P(3, 1), A, A) == P(2, 1, 1)

    def test_rejects_unknown_pair(self):
        with pytest.raises(DomainError):
            bv_dual(P(2, 2), C, D)

    def test_rejects_invalid_input(self):
        with pytest.raises(DomainError):
            bv_dual(P(3, 1), C, B)

    def test_closed_forms(self):
        checked = 0
        for a in range(1, 41):
            for b in range(1, 40 // a + 1):
                for source, target, p, expected in bv_golden_forms(a, b):
                    assert bv_dual(p, source, target) == expected, (a, b, source, target)
                    checked += 1
        assert checked > 50

    def test_order_reversing_on_symplectic_side(self):
        for total in range(2, 13, 2):
            parts = enumerate_partitions(total, C)
            for p in parts:
                for q in parts:
                    if dominates(p, q):
                        assert dominates(bv_dual(q, C, B), bv_dual(p, C, B))
