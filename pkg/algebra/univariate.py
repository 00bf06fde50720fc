"""Exact integer univariate polynomial helpers on top of sympy."""

from collections.abc import Mapping
from typing import Optional

from sympy import Poly, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from common.exceptions import PolynomialDivisionByZeroError
from common.logging_config import get_logger

logger = get_logger(__name__)

A = Symbol("a")


def integer_poly(coefficients: Mapping[int, int]) -> Poly:
    """Build the integer polynomial sum c_k a^k from an exponent -> coefficient mapping."""
    terms = {(k,): c for k, c in coefficients.items() if c}
    if not terms:
        return Poly(0, A, domain=ZZ)
    return Poly.from_dict(terms, A, domain=ZZ)


def poly_coefficients(poly: Poly) -> dict[int, int]:
    """Nonzero coefficients of a univariate polynomial keyed by exponent."""
    return {monom[0]: int(coef) for monom, coef in poly.terms() if coef != 0}


def monomial(k: int) -> Poly:
    return integer_poly({k: 1})


def a_minus_one() -> Poly:
    return integer_poly({1: 1, 0: -1})


def power_minus_one(k: int) -> Poly:
    """a^k - 1."""
    return integer_poly({k: 1, 0: -1}) if k else Poly(0, A, domain=ZZ)


def exact_divide(numerator: Poly, denominator: Poly) -> Optional[Poly]:
    """
    Exact division in Z[a].

    Args:
        numerator: Dividend N
        denominator: Divisor D

    Returns:
        Q with N = D·Q when the division is exact over the integers, otherwise None

    Raises:
        PolynomialDivisionByZeroError: If D is the zero polynomial
    """
    if denominator.is_zero:
        raise PolynomialDivisionByZeroError("division by the zero polynomial")
    try:
        quotient = numerator.exquo(denominator)
    except ExactQuotientFailed:
        logger.debug(f"{numerator.as_expr()} is not divisible by {denominator.as_expr()}")
        return None
    return quotient
