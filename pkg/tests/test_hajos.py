"""Tests for Hajós factorizations, the equation a^R = a^I(1 + a^M(a - 1)) and its residue split."""

import random

import pytest

from algebra.exponent import ExponentPolynomial
from algebra.univariate import a_minus_one
from common.exceptions import ContractViolationError, EnumerationBoundError
from cyclic.equations import lemma_L72_decompose
from cyclic.factorization import is_factorization
from cyclic.hajos import circ, hajos_enumerate, hcg_families, hcg_pairs, is_hajos, krasner_companions, solve_eq_EF
from cyclic.krasner import krasner_pairs
from cyclic.models import DivisorChain, FactorizationPair


def pair_set(pairs):
    return {(p.left, p.right) for p in pairs}


class TestCirc:
    """The S ∘ T operation."""

    def test_example_from_z6(self):
        assert frozenset({1, 2}) in circ({0, 1}, {0, 1, 2})

    def test_every_member_has_one_offset_per_element(self):
        family = circ({0, 1}, {0, 2})
        assert family == {frozenset({0, 1}), frozenset({0, 3}), frozenset({2, 1}), frozenset({2, 3})}

    def test_modular_and_empty(self):
        assert circ({0, 1}, {0, 4}, 5) == {frozenset({0, 1}), frozenset({0}), frozenset({1, 4}), frozenset({0, 4})}
        assert circ(set(), {0, 1}) == {frozenset()}


class TestHajosEnumerate:
    """Recursive construction of Hajós factorizations."""

    @pytest.mark.parametrize('n, left, right', [
        (2, {0, 1}, {1}),
        (6, {1, 2}, {1, 3, 5}),
        (12, {1, 2, 7, 8}, {1, 3, 5}),
    ])
    def test_contains_examples(self, n, left, right):
        assert (frozenset(left), frozenset(right)) in pair_set(hajos_enumerate(n))

    def test_pairs_are_factorizations_with_chains(self):
        for n in range(1, 13):
            for pair in hajos_enumerate(n):
                assert is_factorization(pair.left, pair.right, n)
                assert pair.chain is not None and pair.chain.n == n
                assert pair.kind == 'hajos'

    def test_krasner_pairs_are_hajos(self):
        for n in range(1, 13):
            for pair in krasner_pairs(n):
                assert is_hajos(pair.left, pair.right, n)

    def test_bound(self):
        with pytest.raises(EnumerationBoundError):
            hajos_enumerate(20)

    def test_matches_chain_families(self):
        for n in (2, 4, 6, 8):
            assert pair_set(hajos_enumerate(n)) == hcg_pairs(n)

    def test_hcg_families_of_trivial_chain(self):
        r_family, t_family = hcg_families(DivisorChain.of(1, 3))
        assert r_family == {frozenset({0, 1, 2})}
        assert t_family == {frozenset({0}), frozenset({1}), frozenset({2})}


class TestIsHajos:
    """The polynomial characterization."""

    def test_examples(self):
        assert is_hajos({1, 2}, {1, 3, 5}, 6)
        assert is_hajos({0, 1}, {1}, 2)
        assert not is_hajos({0, 1}, {0, 1}, 4)

    def test_unreduced_input_is_reduced_first(self):
        assert is_hajos({7, 8}, {1, 3, 5}, 6)
        assert not is_hajos({0, 6}, {1, 3, 5}, 6)


class TestKrasnerCompanions:
    """Krasner pairs (I, J) with (I, T) and (R, J) factorizations."""

    def test_z6(self, krasner_six):
        assert krasner_six in krasner_companions({1, 2}, {1, 3, 5}, 6)

    def test_krasner_pair_is_its_own_companion(self):
        n = 5
        companions = krasner_companions(range(n), {0}, n)
        assert FactorizationPair.of(range(n), {0}, n) in companions

    def test_z12(self):
        companions = krasner_companions({1, 2, 7, 8}, {1, 3, 5}, 12)
        assert FactorizationPair.of({0, 1, 6, 7}, {0, 2, 4}, 12) in companions

    def test_non_factorization_has_none(self):
        assert krasner_companions({0, 1}, {0, 1}, 4) == []


class TestSolveEF:
    """a^R = a^I(1 + a^M(a - 1))."""

    @pytest.mark.parametrize('r, i, m', [
        ({1, 2}, {0, 1}, {0}),
        ({0, 1}, {0, 1}, set()),
        ({1, 3, 5}, {0, 2, 4}, {0}),
        ({3}, {0}, {0, 1, 2}),
    ])
    def test_solutions(self, r, i, m):
        assert solve_eq_EF(r, i) == frozenset(m)

    def test_no_solution(self):
        assert solve_eq_EF({0, 2}, {0}) is None
        assert solve_eq_EF({0, 1}, set()) is None


class TestResidueSplit:
    """M = M' ⊔ M'' for a lifted R."""

    def test_lifted_right_coordinate(self):
        result = lemma_L72_decompose({0, 1}, {0}, {0, 3}, {1}, 2)
        assert result.m_prime == frozenset()
        assert result.m_second == frozenset({1})
        assert result.h == (1,)
        assert result.r_prime == frozenset({0, 1})
        assert not result.containment_checked

    def test_reduced_r_keeps_m(self):
        result = lemma_L72_decompose({0}, {0, 1}, {1}, {0}, 2)
        assert result.m_prime == frozenset({0})
        assert result.m_second == frozenset()
        assert result.h == ()
        assert result.containment_checked

    def test_mixed_split(self):
        result = lemma_L72_decompose({0}, {0, 1}, {3}, {0, 1, 2}, 2)
        assert result.m_prime == frozenset({0})
        assert result.m_second == frozenset({1, 2})
        assert result.lambdas == ((1, 1),)
        assert result.to_json()['h'] == [1]

    def test_equation_must_hold(self):
        """a^{0, 2} != 1 + a^{0, 1}(a - 1) = a^2."""
        with pytest.raises(ContractViolationError):
            lemma_L72_decompose({0}, {0, 1}, {0, 2}, {0, 1}, 2)

    def test_pair_must_be_krasner(self):
        with pytest.raises(ContractViolationError):
            lemma_L72_decompose({0, 1}, {0, 1}, {0, 1}, set(), 4)

    def test_lifted_hajos_sides(self):
        """Hajós sides R with companion I, lifted by random multiples of n, always split."""
        rng = random.Random(72)
        instances = 0
        for n in (2, 3, 4, 6, 8):
            sides = {side for pair in hajos_enumerate(n) for side in (pair.left, pair.right)}
            for krasner in krasner_pairs(n):
                i, j = krasner.left, krasner.right
                for r in sorted(sides, key=sorted):
                    if solve_eq_EF(r, i) is None:
                        continue
                    for _ in range(6):
                        lifted = frozenset(x + n * rng.randint(0, 2) for x in r)
                        m = solve_eq_EF(lifted, i)
                        assert m is not None, (n, sorted(i), sorted(lifted))

                        result = lemma_L72_decompose(i, j, lifted, m, n)

                        assert result.r_prime == r
                        assert solve_eq_EF(result.r_prime, i) == result.m_prime
                        h_poly = ExponentPolynomial.from_multiset(result.h)
                        assert ExponentPolynomial.from_set(j) * h_poly == ExponentPolynomial.from_set(result.m_second)
                        rebuilt = (
                            ExponentPolynomial.from_set(result.r_prime).to_sympy()
                            + ExponentPolynomial.from_set(i).to_sympy()
                            * a_minus_one()
                            * ExponentPolynomial.from_set(result.m_second).to_sympy()
                        )
                        assert ExponentPolynomial.from_set(lifted).to_sympy() == rebuilt
                        assert not result.m_prime & result.m_second
                        assert result.m_prime | result.m_second == m
                        instances += 1
        assert instances >= 200
