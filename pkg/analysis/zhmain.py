"""Arrangements of X_w indexed by a left set and a right set, with their residue certificates."""

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from analysis.bayonet_table import BayonetTable, compute_Xw
from analysis.recognizer import StarRecognizer
from analysis.sided_sets import SidedSet, SystemOfFactorizations, enumerate_system
from arrangements.matrices import BayonetWord, WordMatrix
from codes.models import FiniteCode
from common.constants import DEFAULT_SEARCH_BUDGET
from common.exceptions import PreconditionError, SearchBudgetExceededError, TheoremViolationError
from common.logging_config import get_logger
from common.types import sorted_set
from cyclic.factorization import is_factorization

logger = get_logger(__name__)

Cell = tuple[int, int]


@dataclass(frozen=True)
class ZHMainArrangement:
    """
    X_w laid out with rows indexed by P and columns indexed by Q.

    ``p_order`` and ``q_order`` list the elements p_k and q_m in row and
    column order. ``p_sequences[m][k]`` is p_{k,m} with i_{k,m} + p_{k,m} = q_m
    and ``q_sequences[k][m]`` is q_{k,m} with j_{k,m} + q_{k,m} = p_k, all
    modulo n. ``phi`` maps (p_k, q_m) to the word in cell (k, m).
    """
    matrix: WordMatrix
    n: int
    p_order: tuple[int, ...]
    q_order: tuple[int, ...]
    p_sequences: tuple[tuple[int, ...], ...]
    q_sequences: tuple[tuple[int, ...], ...]
    phi: dict[tuple[int, int], BayonetWord]

    def row_residues(self) -> list[frozenset[int]]:
        return [frozenset(w.left % self.n for w in row) for row in self.matrix.word_rows()]

    def column_residues(self) -> list[frozenset[int]]:
        return [frozenset(w.right % self.n for w in column) for column in self.matrix.word_columns()]

    def phi_is_bijection(self, table: BayonetTable) -> bool:
        images = list(self.phi.values())
        domain = {(p, q) for p in self.p_order for q in self.q_order}
        return set(self.phi) == domain and len(set(images)) == len(images) and set(images) == set(table.words())

    def to_json(self) -> dict:
        return {
            "P": list(self.p_order),
            "Q": list(self.q_order),
            "matrix": [[w.to_json() for w in row] for row in self.matrix.entries],
            "P_m": [list(s) for s in self.p_sequences],
            "Q_k": [list(s) for s in self.q_sequences],
        }


def _compatible(pair: Cell, p_k: int, q_m: int, p_set: frozenset[int], q_set: frozenset[int], n: int) -> bool:
    i, j = pair
    return (q_m - i) % n in p_set and (p_k - j) % n in q_set


def _has_perfect_matching(cells: list[Cell], elements: list[Cell], allowed: dict[Cell, list[Cell]]) -> bool:
    graph = nx.Graph()
    left_nodes = [("cell", c) for c in cells]
    graph.add_nodes_from(left_nodes, bipartite=0)
    graph.add_nodes_from((("word", e) for e in elements), bipartite=1)
    for c in cells:
        for e in allowed[c]:
            graph.add_edge(("cell", c), ("word", e))
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left_nodes)
    return all(node in matching for node in left_nodes)


def zhmain_arrangement(
    code: FiniteCode,
    sep: str,
    left: SidedSet,
    right: SidedSet,
    table: Optional[BayonetTable] = None,
    system: Optional[SystemOfFactorizations] = None,
    letter: str = "a",
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> ZHMainArrangement:
    """
    Arrange X_w as an |P| × |Q| matrix satisfying the residue equations.

    Each cell (k, m) receives a word a^i w a^j with q_m - i in P and p_k - j in
    Q modulo n. Completed rows must have residue sets R_k forming
    factorizations (R_k, P) and being right sets; completed columns must have
    residue sets T_m forming factorizations (Q, T_m) and being left sets;
    finally every (R_k, T_m) must be a factorization.

    Raises:
        PreconditionError: If P is not a left set or Q not a right set of the code
        SearchBudgetExceededError: If the backtracking visits more than ``budget`` nodes
        TheoremViolationError: If no arrangement satisfies the certificates
    """
    recognizer = StarRecognizer(code) if system is None or table is None else None
    if system is None:
        system = enumerate_system(recognizer, letter)
    if table is None:
        table = compute_Xw(recognizer, sep, letter)
    n = system.n
    p_set, q_set = frozenset(left.residues), frozenset(right.residues)
    if p_set not in system.lefts:
        raise PreconditionError(f"{sorted_set(p_set)} is not a left set of {code.canonical()}")
    if q_set not in system.rights:
        raise PreconditionError(f"{sorted_set(q_set)} is not a right set of {code.canonical()}")

    bundle = {
        "code": code.to_json(),
        "letter": letter,
        "w": sep,
        "P": sorted_set(p_set),
        "Q": sorted_set(q_set),
        "Xw": [list(e) for e in table.sorted_elements()],
    }
    p_order, q_order = tuple(sorted(p_set)), tuple(sorted(q_set))
    s, t = len(p_order), len(q_order)
    elements = table.sorted_elements()
    if len(elements) != s * t:
        raise TheoremViolationError(f"|X_{sep}| = {len(elements)} but |P|·|Q| = {s * t}", bundle)

    cells = [(k, m) for k in range(s) for m in range(t)]
    allowed = {
        (k, m): [e for e in elements if _compatible(e, p_order[k], q_order[m], p_set, q_set, n)]
        for k, m in cells
    }
    if not _has_perfect_matching(cells, elements, allowed):
        raise TheoremViolationError(f"no bijection P × Q → X_{sep} satisfies the residue equations", bundle)

    rights, lefts = set(system.rights), set(system.lefts)
    grid: dict[Cell, Cell] = {}
    used: set[Cell] = set()
    visited = 0

    def row_ok(k: int) -> bool:
        residues = frozenset(grid[(k, m)][0] % n for m in range(t))
        return len(residues) == t and residues in rights and is_factorization(residues, p_set, n)

    def column_ok(m: int) -> bool:
        residues = frozenset(grid[(k, m)][1] % n for k in range(s))
        return len(residues) == s and residues in lefts and is_factorization(q_set, residues, n)

    def all_pairs_ok() -> bool:
        rows = [frozenset(grid[(k, m)][0] for m in range(t)) for k in range(s)]
        columns = [frozenset(grid[(k, m)][1] for k in range(s)) for m in range(t)]
        return all(is_factorization(r, c, n) for r in rows for c in columns)

    def place(index: int) -> bool:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise SearchBudgetExceededError(f"arrangement search for X_{sep} exceeded {budget} nodes")
        if index == len(cells):
            return all_pairs_ok()
        k, m = cells[index]
        for element in allowed[(k, m)]:
            if element in used:
                continue
            grid[(k, m)] = element
            used.add(element)
            if (m < t - 1 or row_ok(k)) and (k < s - 1 or column_ok(m)) and place(index + 1):
                return True
            used.discard(element)
            del grid[(k, m)]
        return False

    if not place(0):
        logger.error(f"No certified arrangement of X_{sep} for P={sorted_set(p_set)}, Q={sorted_set(q_set)}")
        raise TheoremViolationError(f"no arrangement of X_{sep} satisfies the row and column certificates", bundle)

    words = {cell: BayonetWord(grid[cell][0], sep, grid[cell][1], letter) for cell in cells}
    matrix = WordMatrix.of([[words[(k, m)] for m in range(t)] for k in range(s)])
    p_sequences = tuple(tuple((q_order[m] - grid[(k, m)][0]) % n for k in range(s)) for m in range(t))
    q_sequences = tuple(tuple((p_order[k] - grid[(k, m)][1]) % n for m in range(t)) for k in range(s))
    phi = {(p_order[k], q_order[m]): words[(k, m)] for k, m in cells}
    logger.debug(f"Arranged X_{sep} as {s}×{t} after {visited} placements")
    return ZHMainArrangement(matrix, n, p_order, q_order, p_sequences, q_sequences, phi)
