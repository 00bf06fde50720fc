"""Column certificates of good arrangements: r_{p,q} + j_{p,q} = n_q with distinct n_q."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional, Union

import networkx as nx

from arrangements.matrices import NatMatrix
from common.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class GapColumn:
    """Witness for one column: the sequence J_q and the common value n_q."""
    j_sequence: tuple[int, ...]
    n_q: int


@dataclass(frozen=True)
class GapCertificate:
    columns: tuple[GapColumn, ...]
    strict: bool
    ok: bool = True

    def to_json(self) -> dict:
        return {
            "ok": True,
            "strict": self.strict,
            "columns": [{"J_q": list(c.j_sequence), "n_q": c.n_q} for c in self.columns],
        }


@dataclass(frozen=True)
class GapFailure:
    column: int
    reason: str
    ok: bool = False

    def to_json(self) -> dict:
        return {"ok": False, "column": self.column, "reason": self.reason}


GapResult = Union[GapCertificate, GapFailure]


def _candidates(column: tuple[int, ...], j_set: frozenset[int], n: int, strict: bool) -> list[int]:
    common: Optional[set[int]] = None
    for r in column:
        values = {r + j for j in j_set} if strict else {(r + j) % n for j in j_set}
        common = values if common is None else common & values
    return sorted(common or set())


def _witness(column: tuple[int, ...], value: int, j_set: frozenset[int], n: int, strict: bool) -> tuple[int, ...]:
    sequence = []
    for r in column:
        if strict:
            sequence.append(value - r)
        else:
            sequence.append(min(j for j in j_set if (r + j) % n == value))
    return tuple(sequence)


def verify_gap(matrix: NatMatrix, j: Iterable[int], n: int, strict: bool) -> GapResult:
    """
    Find for every column a sequence J_q of elements of J and a value n_q with
    r_{1,q} + j_{1,q} = ... = r_{m,q} + j_{m,q} = n_q, all n_q distinct.

    Equalities are modulo n unless ``strict``; strict mode needs entries < n.
    The smallest candidate is taken per column when that keeps the n_q
    distinct, otherwise a bipartite matching between columns and candidate
    values is used.

    Returns:
        GapCertificate, or GapFailure naming the first column that cannot be satisfied
    """
    j_set = frozenset(j)
    if strict and matrix.max_entry() >= n:
        return GapFailure(0, f"strict check needs entries below {n}")
    candidates = []
    for q, column in enumerate(matrix.columns()):
        values = _candidates(column, j_set, n, strict)
        if not values:
            return GapFailure(q, f"no common value r + j for column {list(column)}")
        candidates.append(values)

    chosen = [values[0] for values in candidates]
    if len(set(chosen)) != len(chosen):
        graph = nx.Graph()
        columns = [("col", q) for q in range(len(candidates))]
        graph.add_nodes_from(columns, bipartite=0)
        for q, values in enumerate(candidates):
            for v in values:
                graph.add_edge(("col", q), ("val", v))
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=columns)
        for q in range(len(candidates)):
            if ("col", q) not in matching:
                return GapFailure(q, "values n_q cannot be chosen pairwise distinct")
        chosen = [matching[("col", q)][1] for q in range(len(candidates))]

    columns_out = tuple(
        GapColumn(_witness(column, value, j_set, n, strict), value)
        for column, value in zip(matrix.columns(), chosen)
    )
    return GapCertificate(columns_out, strict)
