"""Exact polynomial arithmetic: non-commutative polynomials over words and exponent sets."""

from algebra.exponent import ExponentPolynomial
from algebra.noncommutative import NoncommutativePolynomial
from algebra.univariate import a_minus_one, exact_divide, integer_poly, poly_coefficients, power_minus_one

__all__ = [
    "ExponentPolynomial",
    "NoncommutativePolynomial",
    "a_minus_one",
    "exact_divide",
    "integer_poly",
    "poly_coefficients",
    "power_minus_one",
]
