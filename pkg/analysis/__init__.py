"""Maximal-code analysis: recognizers, systems of factorizations, X_w tables and their arrangements."""

from analysis.bayonet_table import BayonetTable, TriangleResult, compute_Xw, triangle_conjecture_check, triangle_property
from analysis.constructions import (
    DominatedInjection,
    dominated_injection_exists,
    good_arrangement_from_system,
    injection_from_good_arrangement,
    krasner_pairs_in_system,
    replay_domination_chain,
    separators,
)
from analysis.recognizer import StarRecognizer, build_star_recognizer
from analysis.scans import CodeAnalysis, CorollaryReport, ScanReport, analyze_code, corollary_scan, scan_corpus
from analysis.sided_sets import (
    SidedSet,
    SystemOfFactorizations,
    enumerate_system,
    is_right_completable,
    is_strongly_right_completable,
    left_set_of,
    right_set_of,
)
from analysis.zhmain import ZHMainArrangement, zhmain_arrangement

__all__ = [
    "BayonetTable",
    "CodeAnalysis",
    "CorollaryReport",
    "DominatedInjection",
    "ScanReport",
    "SidedSet",
    "StarRecognizer",
    "SystemOfFactorizations",
    "TriangleResult",
    "ZHMainArrangement",
    "analyze_code",
    "build_star_recognizer",
    "compute_Xw",
    "corollary_scan",
    "dominated_injection_exists",
    "enumerate_system",
    "good_arrangement_from_system",
    "injection_from_good_arrangement",
    "is_right_completable",
    "is_strongly_right_completable",
    "krasner_pairs_in_system",
    "left_set_of",
    "replay_domination_chain",
    "right_set_of",
    "separators",
    "triangle_conjecture_check",
    "triangle_property",
    "zhmain_arrangement",
]
