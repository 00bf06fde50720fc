"""Good arrangements of X_w from a Krasner pair of the system, and the dominated injections they yield."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from analysis.bayonet_table import BayonetTable, compute_Xw, triangle_property
from analysis.recognizer import StarRecognizer
from analysis.sided_sets import SystemOfFactorizations, enumerate_system
from analysis.zhmain import zhmain_arrangement
from arrangements.bayonet import build_good_arrangement, is_good_arrangement
from arrangements.matrices import BayonetWord, WordMatrix
from codes.models import FiniteCode
from common.constants import DEFAULT_SEARCH_BUDGET
from common.exceptions import ArrangementError, PreconditionError, TheoremViolationError
from common.logging_config import get_logger
from common.types import Word, sorted_set, word_key
from cyclic.krasner import chain_of_krasner, is_krasner, krasner_decompose, krasner_pairs
from cyclic.models import FactorizationPair

logger = get_logger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class DominationRow:
    """Counts for one K: sources with i + j <= K, images with i' + j' <= K, grid points with i' + j' <= K."""
    k: int
    sources: int
    images: int
    grid: int


@dataclass(frozen=True)
class DominationReplay:
    ok: bool
    rows: tuple[DominationRow, ...]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DominatedInjection:
    """An injection X_w → a^I w a^J with Φ(a^i w a^j) = a^{i'} w a^{j'}, i' <= i, j' <= j."""
    mapping: tuple[tuple[BayonetWord, BayonetWord], ...]
    replay: DominationReplay

    def as_dict(self) -> dict[BayonetWord, BayonetWord]:
        return dict(self.mapping)

    def to_json(self) -> dict:
        return {
            "mapping": [[source.to_json(), target.to_json()] for source, target in self.mapping],
            "replay_ok": self.replay.ok,
        }


def separators(code: FiniteCode, letter: str) -> list[Word]:
    """
    Candidate words w of B(a*B)*: the cores of the code words with the letter
    stripped on both sides, and every other letter of the alphabet.
    """
    found = {word.strip(letter) for word in code.words} | (set(code.alphabet) - {letter})
    return sorted((w for w in found if w), key=word_key)


def krasner_pairs_in_system(system: SystemOfFactorizations) -> list[FactorizationPair]:
    """Krasner pairs (I, J) of order n with a^J a left set and a^I a right set."""
    lefts, rights = set(system.lefts), set(system.rights)
    return [pair for pair in krasner_pairs(system.n) if pair.right in lefts and pair.left in rights]


def good_arrangement_from_system(
    code: FiniteCode,
    sep: Word,
    i: Iterable[int],
    j: Iterable[int],
    system: Optional[SystemOfFactorizations] = None,
    table: Optional[BayonetTable] = None,
    letter: str = "a",
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> WordMatrix:
    """
    Good arrangement of X_w with (I, J) as Krasner associated pair.

    The arrangement φ of X_w indexed by the left set J and the right set I
    certifies that every row and column factorizes with (I, J). Its words are
    then placed by build_good_arrangement: blocks cut along the last step of
    the chain of (I, J) are arranged at the smaller order and joined.

    Raises:
        PreconditionError: If (I, J) is not Krasner of order n or not in the system
        TheoremViolationError: If the blocks do not assemble into a good arrangement
    """
    i_set, j_set = frozenset(i), frozenset(j)
    recognizer = StarRecognizer(code) if system is None or table is None else None
    if system is None:
        system = enumerate_system(recognizer, letter)
    n = system.n
    if not is_krasner(i_set, j_set, n):
        raise PreconditionError(f"({sorted_set(i_set)}, {sorted_set(j_set)}) is not a Krasner pair of order {n}")
    if j_set not in system.lefts or i_set not in system.rights:
        raise PreconditionError(
            f"({sorted_set(i_set)}, {sorted_set(j_set)}) is not in the system of {code.canonical()}"
        )
    if table is None:
        table = compute_Xw(recognizer, sep, letter)

    layout = zhmain_arrangement(
        code, sep, system.left_set(j_set), system.right_set(i_set), table, system, letter, budget
    )
    try:
        return build_good_arrangement(layout.matrix.words(), i_set, j_set)
    except ArrangementError as e:
        bundle = {
            "code": code.to_json(),
            "letter": letter,
            "w": sep,
            "I": sorted_set(i_set),
            "J": sorted_set(j_set),
            "Xw": [list(element) for element in table.sorted_elements()],
        }
        logger.error(f"No good arrangement of X_{sep} for (I, J) = ({sorted_set(i_set)}, {sorted_set(j_set)}): {e}")
        raise TheoremViolationError(f"no good arrangement of X_{sep} with the Krasner pair in the system", bundle) from e


def _inject(pairs: list[Pair], i_set: frozenset[int], j_set: frozenset[int], n: int) -> list[Pair]:
    if n == 1:
        return [(0, 0) for _ in pairs]
    chain, _ = chain_of_krasner(i_set, j_set, n)
    if chain.length == 1:
        if j_set == {0}:
            return [(r, 0) for r, _ in pairs]
        return [(0, v) for _, v in pairs]

    split = krasner_decompose(i_set, j_set, n)
    h = split.h
    base_pair = split.base_pair()
    key = (lambda rv: rv[0] // h) if split.side == "left" else (lambda rv: rv[1] // h)
    images: dict[int, Pair] = {}
    for block in sorted({key(rv) for rv in pairs}):
        indices = [index for index, rv in enumerate(pairs) if key(rv) == block]
        inner = _inject([(pairs[x][0] % h, pairs[x][1] % h) for x in indices], base_pair.left, base_pair.right, h)
        for index, (lam, sigma) in zip(indices, inner):
            images[index] = (lam + block * h, sigma) if split.side == "left" else (lam, sigma + block * h)
    return [images[index] for index in range(len(pairs))]


def replay_domination_chain(
    mapping: Iterable[tuple[BayonetWord, BayonetWord]],
    i: Iterable[int],
    j: Iterable[int],
) -> DominationReplay:
    """
    For every K check #{sources with i + j <= K} <= #{images with i' + j' <= K}
    <= #{(i', j') in I × J with i' + j' <= K} <= K + 1.
    """
    pairs = list(mapping)
    grid = [x + y for x in i for y in j]
    if not pairs:
        return DominationReplay(True, ())
    top = max(max(s.left + s.right for s, _ in pairs), max(grid))
    rows = []
    ok = True
    for k in range(top + 1):
        row = DominationRow(
            k,
            sum(1 for s, _ in pairs if s.left + s.right <= k),
            sum(1 for _, t in pairs if t.left + t.right <= k),
            sum(1 for g in grid if g <= k),
        )
        rows.append(row)
        if not (row.sources <= row.images <= row.grid <= k + 1):
            ok = False
    return DominationReplay(ok, tuple(rows))


def injection_from_good_arrangement(
    arrangement: WordMatrix,
    i: Iterable[int],
    j: Iterable[int],
) -> DominatedInjection:
    """
    Dominated injection Φ: X_w → a^I w a^J read off a good arrangement.

    The map is computed on exponents reduced modulo n along the chain of
    (I, J); each level either splits the left exponents as i + th or the right
    ones as j + μh and recurses on blocks. Injectivity, domination and the
    triangle inequalities are checked before returning.

    Raises:
        PreconditionError: If the matrix is not a good arrangement with (I, J)
        TheoremViolationError: If the map is not a dominated injection
    """
    i_set, j_set = frozenset(i), frozenset(j)
    check = is_good_arrangement(arrangement, i_set, j_set)
    if not check:
        raise PreconditionError(f"not a good arrangement with ({sorted_set(i_set)}, {sorted_set(j_set)}): {check.reason}")
    n = arrangement.m * arrangement.ell
    sources = sorted(arrangement.words())
    images = _inject([(w.left % n, w.right % n) for w in sources], i_set, j_set, n)
    mapping = tuple(
        (source, BayonetWord(lam, source.sep, sigma, source.letter))
        for source, (lam, sigma) in zip(sources, images)
    )
    bundle = {
        "I": sorted_set(i_set),
        "J": sorted_set(j_set),
        "arrangement": arrangement.to_json(),
    }

    targets = [t for _, t in mapping]
    if len(set(targets)) != len(targets):
        raise TheoremViolationError("the map read off the good arrangement is not injective", bundle)
    for source, target in mapping:
        if target.left not in i_set or target.right not in j_set:
            raise TheoremViolationError(f"{target} is outside a^I w a^J", bundle)
        if target.left > source.left or target.right > source.right:
            raise TheoremViolationError(f"{target} is not below {source}", bundle)

    replay = replay_domination_chain(mapping, i_set, j_set)
    triangle = triangle_property((s.left, s.right) for s in sources)
    if not replay or not triangle:
        raise TheoremViolationError("the triangle inequalities fail for a dominated injection", bundle)
    logger.debug(f"Dominated injection of {len(mapping)} words verified")
    return DominatedInjection(mapping, replay)


def dominated_injection_exists(elements: Iterable[Pair], i: Iterable[int], j: Iterable[int]) -> bool:
    """Decide by maximum bipartite matching whether X_w injects into I × J below each element."""
    sources = sorted(set(elements))
    grid = sorted((x, y) for x in set(i) for y in set(j))
    if len(sources) > len(grid):
        return False
    graph = nx.Graph()
    top = [("x", s) for s in sources]
    graph.add_nodes_from(top, bipartite=0)
    graph.add_nodes_from((("g", g) for g in grid), bipartite=1)
    for s in sources:
        for g in grid:
            if g[0] <= s[0] and g[1] <= s[1]:
                graph.add_edge(("x", s), ("g", g))
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    return all(node in matching for node in top)
