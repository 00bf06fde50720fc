"""Finite codes: predicates, factorizing codes and code files."""

from codes.factorizing import (
    FactorizationVerdict,
    FactorizingCode,
    PositiveFactorization,
    build_code_from_PS,
    code_from_ec2,
    search_positive_factorization,
    verify_factorization_PS,
)
from codes.models import FiniteCode
from codes.predicates import CodeCheck, CodeClass, code_class, in_star, is_code, is_maximal, letter_order

__all__ = [
    "CodeCheck",
    "CodeClass",
    "FactorizationVerdict",
    "FactorizingCode",
    "FiniteCode",
    "PositiveFactorization",
    "build_code_from_PS",
    "code_class",
    "code_from_ec2",
    "in_star",
    "is_code",
    "is_maximal",
    "letter_order",
    "search_positive_factorization",
    "verify_factorization_PS",
]
