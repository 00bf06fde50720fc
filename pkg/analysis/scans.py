"""Whole-code analyses, corollary replays and corpus-wide evidence scans."""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Literal, Optional

from sympy import factorint, isprime

from analysis.bayonet_table import BayonetTable, TriangleResult, compute_Xw, triangle_property
from analysis.constructions import (
    good_arrangement_from_system,
    injection_from_good_arrangement,
    krasner_pairs_in_system,
    separators,
)
from analysis.recognizer import StarRecognizer
from analysis.sided_sets import SystemOfFactorizations, enumerate_system
from analysis.zhmain import zhmain_arrangement
from arrangements.bayonet import arrange_word_rows, find_good_arrangement
from arrangements.matrices import WordMatrix
from codes.corpus import CorpusEntry
from codes.models import FiniteCode
from common.constants import DEFAULT_SEARCH_BUDGET
from common.exceptions import FactorCodesError, PreconditionError, ResourceLimitError, TheoremViolationError
from common.logging_config import get_logger
from common.types import sorted_set
from cyclic.krasner import krasner_pairs
from cyclic.models import FactorizationPair

logger = get_logger(__name__)

CorollaryMode = Literal["prime", "singleton", "omega2", "pair2"]
ScanMode = Literal["krasner-in-system", "omega2", "pair2", "triangle"]
COROLLARY_MODES: tuple[str, ...] = ("prime", "singleton", "omega2", "pair2")
SCAN_MODES: tuple[str, ...] = ("krasner-in-system", "omega2", "pair2", "triangle")


@dataclass(frozen=True)
class SeparatorReport:
    """Everything computed for one separator w."""
    table: BayonetTable
    triangle: TriangleResult
    arrangement: Optional[WordMatrix] = None
    krasner: Optional[FactorizationPair] = None
    layout: Optional[dict] = None
    injection_verified: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "w": self.table.separator,
            "Xw": [list(e) for e in self.table.sorted_elements()],
            "triangle": self.triangle.ok,
            "violating_k": self.triangle.violating_k,
            "arrangement": self.arrangement.to_json() if self.arrangement else None,
            "krasner": {"I": sorted_set(self.krasner.left), "J": sorted_set(self.krasner.right)} if self.krasner else None,
            "layout": self.layout,
            "injection_verified": self.injection_verified,
            "note": self.note,
        }


@dataclass(frozen=True)
class CodeAnalysis:
    code: FiniteCode
    system: SystemOfFactorizations
    krasner_in_system: tuple[FactorizationPair, ...]
    separators: tuple[SeparatorReport, ...]

    @property
    def triangle_ok(self) -> bool:
        return all(report.triangle.ok for report in self.separators)

    def to_json(self) -> dict:
        return {
            "code": self.code.to_json(),
            "letter": self.system.letter,
            "n": self.system.n,
            "lefts": [sorted_set(p) for p in self.system.lefts],
            "rights": [sorted_set(q) for q in self.system.rights],
            "krasner_in_system": [
                {"I": sorted_set(pair.left), "J": sorted_set(pair.right)} for pair in self.krasner_in_system
            ],
            "separators": [report.to_json() for report in self.separators],
        }


@dataclass(frozen=True)
class CorollaryReport:
    mode: str
    n: int
    applicable: bool
    separators: tuple[SeparatorReport, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(report.triangle.ok for report in self.separators)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "applicable": self.applicable,
            "ok": self.ok,
            "separators": [report.to_json() for report in self.separators],
        }


@dataclass(frozen=True)
class ScanReport:
    """Tallies of a corpus scan; ``partial`` is set when some code exceeded a budget."""
    mode: str
    codes: int
    counts: dict[str, int]
    partial: bool
    items: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "codes": self.codes,
            "counts": dict(sorted(self.counts.items())),
            "partial": self.partial,
            "items": list(self.items),
        }


def _tables(recognizer: StarRecognizer, letter: str) -> list[BayonetTable]:
    tables = [compute_Xw(recognizer, w, letter) for w in separators(recognizer.code, letter)]
    return [table for table in tables if len(table)]


def _full_row_pair(left: frozenset[int], n: int) -> FactorizationPair:
    """The Krasner pair of chain 1 | n matching a single row (|P| = 1) or a single column."""
    full = frozenset(range(n))
    if len(left) == 1:
        return FactorizationPair(full, frozenset({0}), n, kind="krasner")
    return FactorizationPair(frozenset({0}), full, n, kind="krasner")


def _separator_with_pair(
    code: FiniteCode,
    table: BayonetTable,
    pair: FactorizationPair,
    system: SystemOfFactorizations,
    letter: str,
    budget: int,
) -> SeparatorReport:
    arrangement = good_arrangement_from_system(
        code, table.separator, pair.left, pair.right, system, table, letter, budget
    )
    injection_from_good_arrangement(arrangement, pair.left, pair.right)
    triangle = triangle_property(table)
    if not triangle:
        raise TheoremViolationError(
            f"X_{table.separator} fails the triangle inequalities at K={triangle.violating_k}",
            {"code": code.to_json(), "w": table.separator, "Xw": [list(e) for e in table.sorted_elements()]},
        )
    return SeparatorReport(table, triangle, arrangement, pair, injection_verified=True)


def analyze_code(code: FiniteCode, letter: str, budget: int = DEFAULT_SEARCH_BUDGET) -> CodeAnalysis:
    """
    System of factorizations, every non-empty X_w, an arrangement of each and the triangle status.

    When a Krasner pair lies in the system, each X_w gets a verified good
    arrangement and dominated injection; otherwise the arrangement indexed by
    the first pair of the system is reported.

    Raises:
        NotMaximalError: If the code is not maximal
        TheoremViolationError: If a guaranteed construction fails
    """
    recognizer = StarRecognizer(code)
    system = enumerate_system(recognizer, letter)
    in_system = tuple(krasner_pairs_in_system(system))
    reports = []
    for table in _tables(recognizer, letter):
        if in_system:
            reports.append(_separator_with_pair(code, table, in_system[0], system, letter, budget))
            continue
        p, q = system.pairs()[0]
        layout = zhmain_arrangement(
            code, table.separator, system.left_set(p), system.right_set(q), table, system, letter, budget
        )
        reports.append(SeparatorReport(table, triangle_property(table), layout=layout.to_json()))
    logger.info(f"Analyzed {code.canonical()}: n={system.n}, {len(reports)} separators")
    return CodeAnalysis(code, system, in_system, tuple(reports))


def _corollary_report(
    code: FiniteCode,
    table: BayonetTable,
    p: frozenset[int],
    q: frozenset[int],
    system: SystemOfFactorizations,
    letter: str,
    budget: int,
) -> SeparatorReport:
    layout = zhmain_arrangement(
        code, table.separator, system.left_set(p), system.right_set(q), table, system, letter, budget
    )
    pair = _full_row_pair(p, system.n)
    arrangement = arrange_word_rows(layout.matrix.entries, pair.left, pair.right)
    bundle = {"code": code.to_json(), "w": table.separator, "P": sorted_set(p), "Q": sorted_set(q)}
    if arrangement is None:
        raise TheoremViolationError(f"the single-row arrangement of X_{table.separator} is not good", bundle)
    triangle = triangle_property(table)
    if not triangle:
        raise TheoremViolationError(f"X_{table.separator} fails the triangle inequalities", bundle)
    injection_from_good_arrangement(arrangement, pair.left, pair.right)
    return SeparatorReport(table, triangle, arrangement, pair, layout.to_json(), injection_verified=True)


def _evidence_report(
    code: FiniteCode,
    table: BayonetTable,
    system: SystemOfFactorizations,
    letter: str,
    budget: int,
) -> SeparatorReport:
    triangle = triangle_property(table)
    in_system = krasner_pairs_in_system(system)
    try:
        if in_system:
            return _separator_with_pair(code, table, in_system[0], system, letter, budget)
        for pair in krasner_pairs(system.n):
            arrangement = find_good_arrangement(table.words(), pair.left, pair.right, budget)
            if arrangement is not None:
                return SeparatorReport(table, triangle, arrangement, pair, note="good arrangement without the pair in the system")
    except FactorCodesError as e:
        return SeparatorReport(table, triangle, note=f"{type(e).__name__}: {e}")
    return SeparatorReport(table, triangle, note="no good arrangement found")


def corollary_scan(
    code: FiniteCode,
    mode: CorollaryMode,
    letter: str = "a",
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> CorollaryReport:
    """
    Replay the corollaries that give good arrangements of every X_w.

    ``prime`` needs a^p in X with p prime (n = 1 is accepted as the trivial
    case) and ``singleton`` a pair of the system with a one-element side; both
    build the single-row or single-column good arrangement and raise on any
    failure. ``omega2`` (Ω(n) <= 2) and ``pair2`` (a side with at most two
    elements) only collect evidence and never raise for a failed arrangement.

    Raises:
        PreconditionError: If the hypothesis of an enforcing mode does not hold
        TheoremViolationError: If an enforcing mode fails on some X_w
    """
    recognizer = StarRecognizer(code)
    system = enumerate_system(recognizer, letter)
    n = system.n
    if mode == "prime":
        if n != 1 and not isprime(n):
            raise PreconditionError(f"the order {n} of {letter!r} is not prime")
        p, q = system.pairs()[0]
        reports = [_corollary_report(code, t, p, q, system, letter, budget) for t in _tables(recognizer, letter)]
        return CorollaryReport(mode, n, True, tuple(reports))
    if mode == "singleton":
        singles = [(p, q) for p, q in system.pairs() if len(p) == 1 or len(q) == 1]
        if not singles:
            raise PreconditionError(f"no pair of the system of {code.canonical()} has a singleton side")
        p, q = singles[0]
        reports = [_corollary_report(code, t, p, q, system, letter, budget) for t in _tables(recognizer, letter)]
        return CorollaryReport(mode, n, True, tuple(reports))
    if mode == "omega2":
        applicable = sum(factorint(n).values()) <= 2
    elif mode == "pair2":
        applicable = any(min(len(p), len(q)) <= 2 for p, q in system.pairs())
    else:
        raise PreconditionError(f"unknown corollary mode {mode!r}")
    if not applicable:
        return CorollaryReport(mode, n, False)
    reports = [_evidence_report(code, t, system, letter, budget) for t in _tables(recognizer, letter)]
    return CorollaryReport(mode, n, True, tuple(reports))


def _scan_item(entry: CorpusEntry, mode: ScanMode, letter: str, budget: int) -> tuple[dict, Counter]:
    code = entry.code
    counts: Counter = Counter()
    item: dict = {"code": code.canonical(), "origin": entry.origin}
    if mode == "krasner-in-system":
        system = enumerate_system(code, letter)
        pairs = krasner_pairs_in_system(system)
        counts["with_krasner_pair" if pairs else "without_krasner_pair"] += 1
        item["n"] = system.n
        item["krasner_in_system"] = [[sorted_set(p.left), sorted_set(p.right)] for p in pairs]
    elif mode == "triangle":
        analysis = analyze_code(code, letter, budget)
        hypothesis = bool(analysis.krasner_in_system)
        counts["with_hypothesis" if hypothesis else "without_hypothesis"] += 1
        counts["separators"] += len(analysis.separators)
        counts["triangle_ok"] += sum(1 for r in analysis.separators if r.triangle.ok)
        counts["codes_triangle_ok"] += int(analysis.triangle_ok)
        item["n"] = analysis.system.n
        item["triangle"] = analysis.triangle_ok
    else:
        report = corollary_scan(code, mode, letter, budget)
        counts["applicable" if report.applicable else "not_applicable"] += 1
        counts["separators"] += len(report.separators)
        counts["good_arrangement"] += sum(1 for r in report.separators if r.arrangement is not None)
        counts["triangle_ok"] += sum(1 for r in report.separators if r.triangle.ok)
        item["n"] = report.n
        item["applicable"] = report.applicable
        item["triangle"] = report.ok
    return item, counts


def scan_corpus(
    entries: Iterable[CorpusEntry],
    mode: ScanMode,
    letter: str = "a",
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> ScanReport:
    """
    Run one evidence scan over a corpus and tally the outcomes.

    Codes that exceed a resource budget are counted as skipped and mark the
    report partial; theorem violations propagate.
    """
    if mode not in SCAN_MODES:
        raise PreconditionError(f"unknown scan mode {mode!r}")
    ordered = sorted(entries, key=lambda e: e.code.canonical())
    totals: Counter = Counter()
    items = []
    partial = False
    for entry in ordered:
        try:
            item, counts = _scan_item(entry, mode, letter, budget)
        except ResourceLimitError as e:
            logger.warning(f"Skipping {entry.code.canonical()}: {e}")
            partial = True
            totals["skipped"] += 1
            items.append({"code": entry.code.canonical(), "origin": entry.origin, "skipped": str(e)})
            continue
        totals.update(counts)
        items.append(item)
    logger.info(f"Scan {mode} over {len(ordered)} codes: {dict(totals)}")
    return ScanReport(mode, len(ordered), dict(totals), partial, tuple(items))
