"""Matrices of exponents and bayonet words, and their good arrangements."""

from arrangements.bayonet import (
    GoodArrangementCheck,
    arrange_word_rows,
    build_good_arrangement,
    find_good_arrangement,
    is_good_arrangement,
)
from arrangements.equations import E1Parameters, ec2_polynomial, eq_E1_form, eq_EC2_build
from arrangements.gap import GapCertificate, GapFailure, verify_gap
from arrangements.good import good_arrangement_columns, good_arrangement_rows, good_rows_matrix
from arrangements.matrices import BayonetWord, NatMatrix, WordMatrix

__all__ = [
    "BayonetWord",
    "E1Parameters",
    "GapCertificate",
    "GapFailure",
    "GoodArrangementCheck",
    "NatMatrix",
    "WordMatrix",
    "arrange_word_rows",
    "build_good_arrangement",
    "ec2_polynomial",
    "eq_E1_form",
    "eq_EC2_build",
    "find_good_arrangement",
    "good_arrangement_columns",
    "good_arrangement_rows",
    "good_rows_matrix",
    "is_good_arrangement",
    "verify_gap",
]
