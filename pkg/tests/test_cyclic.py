"""Tests for divisor chains, factorizations and Krasner pairs of Z_n."""

import pytest

from common.exceptions import ContractViolationError, EnumerationBoundError, InvalidChainError, InvalidModulusError
from cyclic.chains import chain_count, enumerate_chains, omega
from cyclic.factorization import check_bound, complements, enumerate_factorizations, is_factorization, residues
from cyclic.krasner import (
    chain_of_krasner,
    enumerate_krasner,
    is_krasner,
    krasner_decompose,
    krasner_from_chain,
    krasner_pairs,
)
from cyclic.models import DivisorChain, FactorizationPair


class TestDivisorChain:
    """Chains 1 = k_0 | ... | k_s = n."""

    def test_step_sets(self):
        chain = DivisorChain.of(1, 2, 6)
        assert chain.n == 6
        assert chain.length == 2
        assert chain.step_sets() == [frozenset({0, 1}), frozenset({0, 2, 4})]
        assert chain.prefix() == DivisorChain.of(1, 2)
        assert chain.render() == '1|2|6'

    @pytest.mark.parametrize('values', [(), (2, 4), (1, 3, 4), (1, 2, 2)])
    def test_invalid_chains(self, values):
        with pytest.raises(InvalidChainError):
            DivisorChain(values)

    def test_trivial_chain_has_no_prefix(self):
        with pytest.raises(InvalidChainError):
            DivisorChain.of(1).prefix()

    def test_enumerate_chains_of_six(self):
        chains = [c.chain for c in enumerate_chains(6)]
        assert chains == [(1, 2, 6), (1, 3, 6), (1, 6)]

    @pytest.mark.parametrize('n, count', [(1, 1), (2, 1), (6, 3), (8, 4), (12, 8)])
    def test_chain_count(self, n, count):
        assert chain_count(n) == count

    @pytest.mark.parametrize('n, expected', [(12, 3), (1, 0), (7, 1)])
    def test_omega(self, n, expected):
        assert omega(n) == expected

    def test_invalid_modulus(self):
        with pytest.raises(InvalidModulusError):
            enumerate_chains(0)


class TestFactorization:
    """Factorizations (T, R) of Z_n."""

    def test_is_factorization(self):
        assert is_factorization({0, 1}, {0, 2, 4}, 6)
        assert is_factorization({1, 2}, {1, 3, 5}, 6)
        assert not is_factorization({0, 1}, {0, 1, 2}, 6)
        assert not is_factorization({0, 1}, {0, 1}, 4)

    def test_trivial_factorization(self):
        assert is_factorization({0}, {0}, 1)
        assert is_factorization(range(5), {3}, 5)

    def test_residues(self):
        assert residues({7, 8, 1}, 6) == frozenset({1, 2})

    def test_complements(self):
        assert complements(frozenset({0, 2}), 4) == [
            frozenset({0, 1}), frozenset({0, 3}), frozenset({1, 2}), frozenset({2, 3})
        ]
        assert complements(frozenset({0, 1, 2}), 4) == []

    @pytest.mark.parametrize('n, count', [(1, 1), (2, 4), (4, 24)])
    def test_enumerate_factorizations_count(self, n, count):
        pairs = enumerate_factorizations(n)
        assert len(pairs) == count
        assert all(is_factorization(p.left, p.right, n) for p in pairs)
        assert pairs == sorted(pairs, key=FactorizationPair.sort_key)

    def test_bound(self):
        check_bound(16, None)
        with pytest.raises(EnumerationBoundError):
            check_bound(17, None)
        with pytest.raises(EnumerationBoundError):
            enumerate_factorizations(9, bound=8)
        with pytest.raises(InvalidModulusError):
            check_bound(0, 10)

    def test_pair_json(self):
        pair = FactorizationPair.of({2, 0}, {1}, 2, chain=DivisorChain.of(1, 2), kind='krasner')
        assert pair.to_json() == {'n': 2, 'left': [0, 2], 'right': [1], 'kind': 'krasner', 'chain': [1, 2]}
        assert pair.render() == '({0,2}, {1})'

    def test_pair_equality_ignores_annotations(self):
        plain = FactorizationPair.of({0}, {0, 1}, 2)
        annotated = FactorizationPair.of({0}, {0, 1}, 2, chain=DivisorChain.of(1, 2), kind='krasner')
        assert plain == annotated
        assert plain.unordered() == plain.swapped().unordered()


class TestKrasner:
    """Krasner pairs a^I a^J = (a^n - 1)/(a - 1)."""

    @pytest.mark.parametrize('chain, left, right', [
        ((1,), {0}, {0}),
        ((1, 6), {0}, {0, 1, 2, 3, 4, 5}),
        ((1, 2, 6), {0, 2, 4}, {0, 1}),
        ((1, 3, 6), {0, 3}, {0, 1, 2}),
        ((1, 2, 6, 12), {0, 2, 4}, {0, 1, 6, 7}),
    ])
    def test_krasner_from_chain(self, chain, left, right):
        pair = krasner_from_chain(DivisorChain(chain))
        assert (pair.left, pair.right) == (frozenset(left), frozenset(right))
        assert pair.kind == 'krasner'

    def test_is_krasner(self):
        assert is_krasner({0, 1}, {0, 2, 4}, 6)
        assert is_krasner({0, 2, 4}, {0, 1}, 6)
        assert not is_krasner({1, 2}, {1, 3, 5}, 6)
        assert not is_krasner({0, 1}, {0, 2, 4}, 5)

    def test_every_chain_pair_is_a_krasner_factorization(self):
        for n in range(1, 17):
            for chain in enumerate_chains(n):
                pair = krasner_from_chain(chain)
                assert is_krasner(pair.left, pair.right, n)
                assert is_factorization(pair.left, pair.right, n)

    def test_enumerate_and_orientations(self):
        assert len(enumerate_krasner(12)) == 8
        pairs = krasner_pairs(2)
        assert [(p.left, p.right) for p in pairs] == [
            (frozenset({0}), frozenset({0, 1})),
            (frozenset({0, 1}), frozenset({0})),
        ]
        assert len(krasner_pairs(1)) == 1

    def test_contains_z6_example(self, krasner_six):
        assert krasner_six in krasner_pairs(6)

    def test_chain_of_krasner(self):
        chain, swapped = chain_of_krasner({0, 1}, {0, 2, 4}, 6)
        assert chain == DivisorChain.of(1, 2, 6)
        assert swapped
        assert chain_of_krasner({0, 2, 4}, {0, 1}, 6) == (DivisorChain.of(1, 2, 6), False)
        assert chain_of_krasner({1, 2}, {1, 3, 5}, 6) is None

    def test_decompose(self):
        split = krasner_decompose({0, 1}, {0, 2, 4}, 6)
        assert split.side == 'right'
        assert split.base == frozenset({0})
        assert (split.h, split.g) == (2, 3)
        base = split.base_pair()
        assert (base.left, base.right, base.n) == (frozenset({0, 1}), frozenset({0}), 2)

    def test_exactly_one_side_decomposes(self):
        for n in range(2, 17):
            for chain in enumerate_chains(n):
                pair = krasner_from_chain(chain)
                split = krasner_decompose(pair.left, pair.right, n)
                assert split.h == chain.chain[-2]
                assert is_krasner(split.base_pair().left, split.base_pair().right, split.h)

    def test_decompose_rejects_non_krasner(self):
        with pytest.raises(ContractViolationError):
            krasner_decompose({1, 2}, {1, 3, 5}, 6)
        with pytest.raises(ContractViolationError):
            krasner_decompose({0}, {0}, 1)
