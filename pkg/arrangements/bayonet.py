"""Good arrangements of bayonet-word sets C_1 ⊆ a*wa* with a Krasner associated pair."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from common.constants import DEFAULT_SEARCH_BUDGET
from common.exceptions import ArrangementError, SearchBudgetExceededError
from common.logging_config import get_logger
from arrangements.good import good_rows_matrix
from arrangements.matrices import BayonetWord, NatMatrix, WordMatrix
from cyclic.factorization import is_factorization
from cyclic.hajos import is_hajos
from cyclic.krasner import chain_of_krasner, is_krasner, krasner_decompose
from cyclic.models import DivisorChain

logger = get_logger(__name__)


def induced_arrangements(words: WordMatrix) -> tuple[NatMatrix, NatMatrix]:
    """Left-exponent matrix (rows) and right-exponent matrix (columns) of a word matrix."""
    return words.left_matrix(), words.right_matrix()


@dataclass(frozen=True)
class GoodArrangementCheck:
    """Outcome of the three good-arrangement conditions."""
    ok: bool
    hajos_pairs: bool
    rows_good: bool
    columns_good: bool
    chain: Optional[DivisorChain] = None
    reason: str = ""
    failures: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "hajos_pairs": self.hajos_pairs,
            "rows_good": self.rows_good,
            "columns_good": self.columns_good,
            "chain": list(self.chain.chain) if self.chain else None,
            "reason": self.reason,
        }


def _fail(reason: str, chain: Optional[DivisorChain] = None, **flags: bool) -> GoodArrangementCheck:
    return GoodArrangementCheck(
        ok=False,
        hajos_pairs=flags.get("hajos_pairs", False),
        rows_good=flags.get("rows_good", False),
        columns_good=flags.get("columns_good", False),
        chain=chain,
        reason=reason,
    )


def is_good_arrangement(words: WordMatrix, i: Iterable[int], j: Iterable[int]) -> GoodArrangementCheck:
    """
    Check the three conditions of a good arrangement with (I, J) as Krasner associated pair.

    1. every (row set, column set) is Hajós with companion (I, J), n = Card(C_1);
    2. the induced row arrangement is the good arrangement of the rows;
    3. the induced column arrangement is the good arrangement of the columns.
    """
    i_set, j_set = frozenset(i), frozenset(j)
    n = words.m * words.ell
    if len(set(words.words())) != n:
        return _fail("the matrix repeats a word")
    found = chain_of_krasner(i_set, j_set, n)
    if found is None or not is_krasner(i_set, j_set, n):
        return _fail(f"({sorted(i_set)}, {sorted(j_set)}) is not a Krasner pair of order {n}")
    chain, _ = found

    rows, columns = induced_arrangements(words)
    row_sets, column_sets = rows.row_sets(), columns.column_sets()
    if any(len(s) != words.ell for s in row_sets) or any(len(s) != words.m for s in column_sets):
        return _fail("a row or column repeats an exponent", chain)
    for r in row_sets:
        if not is_factorization(r, j_set, n):
            return _fail(f"(R, J) = ({sorted(r)}, {sorted(j_set)}) is not a factorization", chain)
    for t in column_sets:
        if not is_factorization(i_set, t, n):
            return _fail(f"(I, T) = ({sorted(i_set)}, {sorted(t)}) is not a factorization", chain)
    for r in row_sets:
        for t in column_sets:
            if not is_hajos(r, t, n):
                return _fail(f"({sorted(r)}, {sorted(t)}) is not a Hajós factorization", chain)

    try:
        rows_good = good_rows_matrix(row_sets, chain) == rows
    except ArrangementError as e:
        logger.debug(f"Row arrangement does not decompose: {e}")
        rows_good = False
    try:
        columns_good = good_rows_matrix(column_sets, chain).transpose() == columns
    except ArrangementError as e:
        logger.debug(f"Column arrangement does not decompose: {e}")
        columns_good = False

    if not rows_good:
        return _fail("induced row arrangement is not the good one", chain, hajos_pairs=True, columns_good=columns_good)
    if not columns_good:
        return _fail("induced column arrangement is not the good one", chain, hajos_pairs=True, rows_good=True)
    return GoodArrangementCheck(True, True, True, True, chain)


def arrange_word_rows(
    word_rows: Sequence[Iterable[BayonetWord]],
    i: Iterable[int],
    j: Iterable[int],
) -> Optional[WordMatrix]:
    """
    Lay out a fixed partition of bayonet words into word-rows as a good arrangement.

    Words inside each row follow the good row arrangement of the left
    exponents; rows are then ordered so that the first column follows the good
    column arrangement. Returns None when the resulting matrix is not good.
    """
    i_set, j_set = frozenset(i), frozenset(j)
    rows = [sorted(row) for row in word_rows]
    n = sum(len(row) for row in rows)
    found = chain_of_krasner(i_set, j_set, n)
    if found is None:
        return None
    chain, _ = found
    by_left = []
    for row in rows:
        lookup = {w.left: w for w in row}
        if len(lookup) != len(row):
            return None
        by_left.append(lookup)
    try:
        left_layout = good_rows_matrix([frozenset(lookup) for lookup in by_left], chain)
    except ArrangementError:
        return None
    ordered_rows = [[lookup[x] for x in layout_row] for layout_row, lookup in zip(left_layout.rows(), by_left)]

    first_column = {row[0].right: row for row in ordered_rows}
    if len(first_column) != len(ordered_rows):
        return None
    try:
        column_layout = good_rows_matrix([frozenset(first_column)], chain)
    except ArrangementError:
        return None
    matrix = WordMatrix.of([first_column[v] for v in column_layout.row(0)])
    return matrix if is_good_arrangement(matrix, i_set, j_set) else None


Cell = tuple[int, int, int]


def _index_layout(cells: list[Cell], i_set: frozenset[int], j_set: frozenset[int], n: int) -> NatMatrix:
    """Matrix of word indices for cells (left residue, right residue, index) of order n."""
    if len(cells) != n:
        raise ArrangementError(f"{len(cells)} words cannot fill an arrangement of order {n}")
    if n == 1:
        return NatMatrix.of([[cells[0][2]]])
    chain, _ = chain_of_krasner(i_set, j_set, n)
    if chain.length == 1:
        if j_set == {0}:
            return NatMatrix.of([[k for _, _, k in sorted(cells)]])
        return NatMatrix.column([k for _, _, k in sorted(cells, key=lambda cell: cell[1])])

    split = krasner_decompose(i_set, j_set, n)
    base, h = split.base_pair(), split.h
    joined: Optional[NatMatrix] = None
    for t in range(split.g):
        if split.side == "left":
            part = [(x - t * h, y % h, k) for x, y, k in cells if x // h == t]
        else:
            part = [(x % h, y - t * h, k) for x, y, k in cells if y // h == t]
        block = _index_layout(part, base.left, base.right, h)
        if joined is None:
            joined = block
        elif split.side == "left":
            joined = joined.hconcat(block)
        else:
            joined = joined.vconcat(block)
    return joined


def build_good_arrangement(c1: Iterable[BayonetWord], i: Iterable[int], j: Iterable[int]) -> WordMatrix:
    """
    Construct the good arrangement of C_1 with (I, J) as Krasner associated pair.

    Exponents are read modulo n = |I|·|J|. For the chain 1 | n, C_1 is a single
    row ordered by left residue (J = {0}) or a single column ordered by right
    residue (I = {0}). Otherwise, with h the last step of the chain and
    I = I' + {0, h, ..., (g-1)h}, the words with left residue in [th, (t+1)h)
    are arranged recursively with (I', J) at order h, and the g blocks are
    joined side by side. When J carries the step instead, blocks are cut on the
    right residue and stacked.

    Raises:
        ArrangementError: If (I, J) is not Krasner of order |C_1| or the blocks do not assemble into a good arrangement
    """
    words = sorted(set(c1))
    i_set, j_set = frozenset(i), frozenset(j)
    n = len(i_set) * len(j_set)
    if not words or not i_set or not j_set or not is_krasner(i_set, j_set, n):
        raise ArrangementError(f"({sorted(i_set)}, {sorted(j_set)}) is not a Krasner pair of order {len(words)}")
    cells = [(w.left % n, w.right % n, k) for k, w in enumerate(words)]
    layout = _index_layout(cells, i_set, j_set, n)
    matrix = WordMatrix.of([[words[k] for k in row] for row in layout.rows()])
    check = is_good_arrangement(matrix, i_set, j_set)
    if not check:
        raise ArrangementError(f"the assembled arrangement is not good: {check.reason}")
    logger.debug(f"Built a {matrix.m}x{matrix.ell} good arrangement of X_{matrix.sep}")
    return matrix


def _row_candidates(
    remaining: tuple[BayonetWord, ...],
    width: int,
    j_set: frozenset[int],
    n: int,
) -> Iterable[tuple[BayonetWord, ...]]:
    first, rest = remaining[0], remaining[1:]
    for others in combinations(rest, width - 1):
        row = (first,) + others
        lefts = [w.left % n for w in row]
        if len(set(lefts)) != width:
            continue
        if is_factorization(lefts, j_set, n):
            yield row


def find_good_arrangement(
    c1: Iterable[BayonetWord],
    i: Iterable[int],
    j: Iterable[int],
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Optional[WordMatrix]:
    """
    Search a good arrangement of C_1 with (I, J) as Krasner associated pair.

    Candidate partitions of C_1 into word-rows of size |I| are explored in
    canonical order; a row is admissible only when its left residues form a
    factorization of Z_n with J. Each complete partition is laid out by
    arrange_word_rows.

    Returns:
        The arrangement, or None when the candidate space is exhausted

    Raises:
        SearchBudgetExceededError: If more than ``budget`` partitions are tried
    """
    words = tuple(sorted(set(c1)))
    i_set, j_set = frozenset(i), frozenset(j)
    n = len(i_set) * len(j_set)
    if not words or len(words) != n or len({w.sep for w in words}) != 1:
        return None
    if not is_krasner(i_set, j_set, n):
        return None
    width = len(i_set)
    explored = 0

    def search(remaining: tuple[BayonetWord, ...], chosen: list[tuple[BayonetWord, ...]]) -> Optional[WordMatrix]:
        nonlocal explored
        if not remaining:
            explored += 1
            if explored > budget:
                raise SearchBudgetExceededError(f"good arrangement search exceeded {budget} candidates")
            return arrange_word_rows(chosen, i_set, j_set)
        for row in _row_candidates(remaining, width, j_set, n):
            left_over = tuple(w for w in remaining if w not in row)
            result = search(left_over, chosen + [row])
            if result is not None:
                return result
        return None

    result = search(words, [])
    logger.debug(f"Good arrangement search explored {explored} partitions, found={result is not None}")
    return result
