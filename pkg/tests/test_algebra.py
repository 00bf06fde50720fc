"""Tests for noncommutative and exponent polynomials."""

import pytest
from hypothesis import given, settings, strategies as st

from algebra.exponent import ExponentPolynomial
from algebra.noncommutative import NoncommutativePolynomial
from algebra.univariate import exact_divide, integer_poly, power_minus_one
from common.exceptions import (
    AlphabetMismatchError,
    LetterNotInAlphabetError,
    MultiplicityError,
    NotALanguageError,
    PolynomialDivisionByZeroError,
    PolynomialParseError,
)


def poly(text, alphabet='ab'):
    return NoncommutativePolynomial.parse(text, alphabet)


words_ab = st.text(alphabet='ab', max_size=3)
polys_ab = st.dictionaries(words_ab, st.integers(-3, 3), max_size=6).map(
    lambda coefficients: NoncommutativePolynomial(coefficients, 'ab')
)


class TestNoncommutativeArithmetic:
    """Ring operations on Z<A>."""

    def test_product_expands_term_by_term(self):
        """(1 + a)(a + b - 1) = b - 1 + aa + ab."""
        product = poly('1 + a') * poly('a + b - 1')
        assert product == poly('b - 1 + aa + ab')

    def test_product_is_not_commutative(self):
        assert poly('a') * poly('b') == poly('ab')
        assert poly('b') * poly('a') != poly('ab')

    def test_krasner_product_of_z6(self):
        """(1 + a)(1 + a^2 + a^4) is the interval 1 + a + ... + a^5."""
        product = poly('1 + a', 'a') * poly('1 + aa + aaaa', 'a')
        assert product == NoncommutativePolynomial.from_words(['a' * k for k in range(6)], 'a')

    def test_zero_coefficients_are_dropped(self):
        p = poly('a + b') - poly('a')
        assert p == poly('b')
        assert p.support() == frozenset({'b'})

    def test_integer_scaling(self):
        assert 3 * poly('a') == poly('3*a')
        assert poly('a') * 0 == NoncommutativePolynomial.zero('ab')

    def test_alphabet_mismatch_raises(self):
        with pytest.raises(AlphabetMismatchError):
            poly('a', 'ab') + poly('a', 'abc')

    def test_foreign_letter_raises(self):
        with pytest.raises(LetterNotInAlphabetError):
            NoncommutativePolynomial({'c': 1}, 'ab')

    def test_letter_sum(self):
        assert NoncommutativePolynomial.letter_sum('ba') == poly('a + b')

    @settings(max_examples=60, deadline=None)
    @given(polys_ab, polys_ab)
    def test_sum_support_is_within_union(self, p, q):
        """supp(P + Q) ⊆ supp(P) ∪ supp(Q)."""
        assert (p + q).support() <= p.support() | q.support()

    @settings(max_examples=60, deadline=None)
    @given(polys_ab, polys_ab)
    def test_product_matches_naive_convolution(self, p, q):
        """(PQ, w) = Σ_{uv = w} (P, u)(Q, v)."""
        product = p * q
        candidates = {u + v for u in p.support() for v in q.support()}
        for w in candidates:
            expected = sum(
                p.coefficient(w[:k]) * q.coefficient(w[k:])
                for k in range(len(w) + 1)
            )
            assert product.coefficient(w) == expected
        assert product.support() <= candidates


class TestNoncommutativeInspection:
    """Predicates, degree restriction and division."""

    def test_characteristic_and_nonnegative(self):
        assert poly('1 + a + ab').is_characteristic()
        assert poly('2*a').is_nonnegative()
        assert not poly('2*a').is_characteristic()
        assert not poly('a - b').is_nonnegative()

    def test_restrict_degree(self):
        p = poly('b + aa + ab')
        assert p.restrict_degree('b', 0) == poly('aa')
        assert p.restrict_degree('b', 1) == poly('b + ab')
        assert p.letter_degrees('b') == [0, 1]

    def test_restrict_degree_rejects_foreign_letter(self):
        with pytest.raises(LetterNotInAlphabetError):
            poly('a').restrict_degree('c', 0)

    def test_right_divide_exact(self):
        target = poly('aa + ab + b - 1')
        assert target.right_divide(poly('a + b - 1')) == poly('1 + a')

    def test_left_divide_exact(self):
        target = poly('ab') * poly('a + b')
        assert target.left_divide(poly('ab')) == poly('a + b')

    def test_divide_inexact_returns_none(self):
        assert poly('aa + b').right_divide(poly('a + b')) is None

    def test_divide_by_zero_raises(self):
        with pytest.raises(PolynomialDivisionByZeroError):
            poly('a').right_divide(NoncommutativePolynomial.zero('ab'))

    def test_leading_term(self):
        assert poly('1 + b + 2*ab').leading_term() == ('ab', 2)


class TestNoncommutativeText:
    """Rendering and parsing."""

    def test_render(self):
        assert poly('ab + 1 - 2*b').render() == '1 − 2·b + ab'
        assert NoncommutativePolynomial.zero('ab').render() == '0'

    def test_parse_accepts_rendering(self):
        p = poly('b - 1 + aa + 3*ab')
        assert NoncommutativePolynomial.parse(p.render(), 'ab') == p

    @pytest.mark.parametrize('text', ['', 'a + ', 'a b', 'a + + b', 'a + c', '2x'])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(PolynomialParseError):
            NoncommutativePolynomial.parse(text, 'ab')

    def test_to_json(self):
        assert poly('b + 1').to_json() == {'alphabet': 'ab', 'terms': [['', 1], ['b', 1]]}


class TestExponentPolynomial:
    """The bijection between multisets of naturals and polynomials in one letter."""

    def test_multiset_round_trip(self):
        assert ExponentPolynomial.from_multiset([3, 0, 3]).to_multiset() == [0, 3, 3]

    def test_product_is_sumset(self):
        product = ExponentPolynomial.from_set({0, 1}) * ExponentPolynomial.from_set({0, 2, 4})
        assert product == ExponentPolynomial.interval(6)

    def test_union_is_sum(self):
        total = ExponentPolynomial.from_set({0, 1}) + ExponentPolynomial.from_set({1})
        assert total.coefficient(1) == 2
        with pytest.raises(MultiplicityError):
            total.to_set()

    def test_empty_set_is_zero_and_zero_set_is_one(self):
        assert ExponentPolynomial.from_set(set()).is_zero()
        assert ExponentPolynomial.from_set({0}).render() == '1'

    def test_negative_coefficient_is_not_a_language(self):
        with pytest.raises(NotALanguageError):
            ExponentPolynomial({2: -1})

    def test_render_and_weight(self):
        p = ExponentPolynomial.geometric(1, 3)
        assert p.render() == '1 + a + a^2'
        assert p.weight() == 3
        assert p.degree() == 2
        assert p.shift(2).to_set() == frozenset({2, 3, 4})

    def test_embedding_into_noncommutative(self):
        embedded = ExponentPolynomial.from_set({0, 2}).to_noncommutative('a', 'ab')
        assert embedded == poly('1 + aa')

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(0, 8), max_size=5),
        st.lists(st.integers(0, 8), max_size=5),
    )
    def test_product_matches_sympy(self, left, right):
        p = ExponentPolynomial.from_multiset(left)
        q = ExponentPolynomial.from_multiset(right)
        assert (p * q).to_sympy() == p.to_sympy() * q.to_sympy()


def test_exact_divide():
    """(a^6 - 1) / (a^2 - 1) = 1 + a^2 + a^4."""
    quotient = exact_divide(power_minus_one(6), power_minus_one(2))
    assert quotient == integer_poly({0: 1, 2: 1, 4: 1})
    assert exact_divide(power_minus_one(5), power_minus_one(2)) is None
    with pytest.raises(PolynomialDivisionByZeroError):
        exact_divide(power_minus_one(2), power_minus_one(0))
