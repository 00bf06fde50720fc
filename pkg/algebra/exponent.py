"""Exponent polynomials a^H in one letter, in bijection with finite multisets of naturals."""

from collections import Counter
from collections.abc import Iterable, Mapping
from typing import Optional

from sympy import Poly

from algebra.noncommutative import NoncommutativePolynomial
from algebra.univariate import integer_poly, poly_coefficients
from common.exceptions import MultiplicityError, NotALanguageError


class ExponentPolynomial:
    """
    Polynomial with nonnegative integer coefficients in a single letter ``a``.

    The coefficient of a^k is the multiplicity of k in the multiset H, so
    a^{M+L} = a^M·a^L, a^{M∪L} = a^M + a^L (multiset union), a^∅ = 0, a^{0} = 1.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Optional[Mapping[int, int]] = None):
        cleaned: dict[int, int] = {}
        for exponent, coefficient in (coefficients or {}).items():
            if exponent < 0:
                raise ValueError(f"exponent must be a natural, got {exponent}")
            if coefficient < 0:
                raise NotALanguageError(
                    f"exponent polynomial coefficient of a^{exponent} is negative",
                    word=f"a^{exponent}",
                    coefficient=coefficient,
                )
            if coefficient:
                cleaned[exponent] = coefficient
        self._coefficients = cleaned

    @classmethod
    def from_multiset(cls, values: Iterable[int]) -> "ExponentPolynomial":
        return cls(Counter(values))

    @classmethod
    def from_set(cls, values: Iterable[int]) -> "ExponentPolynomial":
        return cls({v: 1 for v in set(values)})

    @classmethod
    def geometric(cls, step: int, count: int) -> "ExponentPolynomial":
        """a^{0, step, ..., (count-1)·step}, i.e. (a^{step·count} - 1)/(a^{step} - 1)."""
        return cls.from_set(step * k for k in range(count))

    @classmethod
    def interval(cls, n: int) -> "ExponentPolynomial":
        """(a^n - 1)/(a - 1) = 1 + a + ... + a^{n-1}."""
        return cls.geometric(1, n)

    @classmethod
    def from_poly(cls, poly: Poly) -> "ExponentPolynomial":
        """Convert a sympy polynomial with nonnegative integer coefficients."""
        return cls(poly_coefficients(poly))

    def coefficient(self, exponent: int) -> int:
        return self._coefficients.get(exponent, 0)

    def to_multiset(self) -> list[int]:
        """Inverse of from_multiset: sorted list with multiplicities."""
        result: list[int] = []
        for exponent in sorted(self._coefficients):
            result.extend([exponent] * self._coefficients[exponent])
        return result

    def to_set(self) -> frozenset[int]:
        """
        Support as a set.

        Raises:
            MultiplicityError: If some coefficient is larger than one
        """
        for exponent, coefficient in self._coefficients.items():
            if coefficient > 1:
                raise MultiplicityError(
                    f"a^{exponent} has coefficient {coefficient}",
                    word=f"a^{exponent}",
                    coefficient=coefficient,
                )
        return frozenset(self._coefficients)

    def is_characteristic(self) -> bool:
        return all(c == 1 for c in self._coefficients.values())

    def is_zero(self) -> bool:
        return not self._coefficients

    def weight(self) -> int:
        """Value at a = 1, the cardinality of the multiset."""
        return sum(self._coefficients.values())

    def degree(self) -> int:
        return max(self._coefficients) if self._coefficients else -1

    def shift(self, k: int) -> "ExponentPolynomial":
        """a^k · self."""
        return ExponentPolynomial({e + k: c for e, c in self._coefficients.items()})

    def __add__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        result = dict(self._coefficients)
        for exponent, coefficient in other._coefficients.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return ExponentPolynomial(result)

    def __mul__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        result: dict[int, int] = {}
        for e1, c1 in self._coefficients.items():
            for e2, c2 in other._coefficients.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return ExponentPolynomial(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExponentPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __repr__(self) -> str:
        return f"ExponentPolynomial({self.render()!r})"

    def render(self, letter: str = "a") -> str:
        if not self._coefficients:
            return "0"
        parts = []
        for exponent in sorted(self._coefficients):
            c = self._coefficients[exponent]
            if exponent == 0:
                mono = ""
            elif exponent == 1:
                mono = letter
            else:
                mono = f"{letter}^{exponent}"
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts)

    def to_sympy(self) -> Poly:
        return integer_poly(self._coefficients)

    def to_noncommutative(self, letter: str, alphabet: Iterable[str]) -> NoncommutativePolynomial:
        """Embed a^H into Z<A> as a polynomial in the given letter."""
        return NoncommutativePolynomial(
            {letter * e: c for e, c in self._coefficients.items()}, alphabet
        )
