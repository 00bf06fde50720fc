"""Good arrangements of families of Hajós factorizations sharing a Krasner companion."""

from collections.abc import Iterable, Sequence
from typing import Union

from common.exceptions import DecompositionError, NotHajosFamilyError
from common.logging_config import get_logger
from arrangements.matrices import NatMatrix
from cyclic.factorization import is_factorization
from cyclic.models import DivisorChain, FactorizationPair

logger = get_logger(__name__)

FamilyMember = Union[FactorizationPair, tuple[Iterable[int], Iterable[int]]]


def _normalize_family(family: Sequence[FamilyMember]) -> list[tuple[frozenset[int], frozenset[int]]]:
    members = []
    for member in family:
        if isinstance(member, FactorizationPair):
            members.append((member.left, member.right))
        else:
            r, t = member
            members.append((frozenset(r), frozenset(t)))
    return members


def _validate_family(
    members: list[tuple[frozenset[int], frozenset[int]]],
    companion: FactorizationPair,
    chain: DivisorChain,
) -> None:
    n = chain.n
    if not members:
        raise NotHajosFamilyError("a family needs at least one pair")
    if companion.n != n:
        raise NotHajosFamilyError(f"companion has order {companion.n} but the chain ends at {n}")
    sizes = {len(r) for r, _ in members}
    if len(sizes) != 1:
        raise NotHajosFamilyError(f"rows have different cardinalities {sorted(sizes)}")
    for r, t in members:
        if not (
            is_factorization(r, t, n)
            and is_factorization(companion.left, t, n)
            and is_factorization(r, companion.right, n)
        ):
            raise NotHajosFamilyError(
                f"({sorted(r)}, {sorted(t)}) does not have {companion.render()} as a Krasner companion"
            )


def arrange_reduced_rows(rows: Sequence[frozenset[int]], chain: tuple[int, ...]) -> list[list[int]]:
    """
    Build the good arrangement with respect to the rows of subsets of {0..k_s - 1}.

    Rows whose residues modulo h = k_{s-1} repeat are in the "+" case
    R = R1 + {0, h, ..., (g-1)h}; the others are in the "∘" case, where each
    element r stands for r mod h lifted by λ = r // h.

    Raises:
        DecompositionError: If a row does not decompose along the chain
    """
    k = chain[-1]
    if len(chain) == 1:
        for row in rows:
            if row != {0}:
                raise DecompositionError(f"row {sorted(row)} is not a subset of Z_1", tuple(sorted(row)))
        return [[0] for _ in rows]
    if len(chain) == 2:
        full = frozenset(range(k))
        if all(len(row) == 1 for row in rows):
            return [[next(iter(row))] for row in rows]
        for row in rows:
            if row != full:
                raise DecompositionError(
                    f"row {sorted(row)} is neither a singleton nor {{0, ..., {k - 1}}}", tuple(sorted(row))
                )
        return [list(range(k)) for _ in rows]

    h = chain[-2]
    g = k // h
    plus_rows = [len({x % h for x in row}) < len(row) for row in rows]
    if any(plus_rows) and not all(plus_rows):
        offender = rows[plus_rows.index(False)]
        raise DecompositionError(f"rows mix the '+' and '∘' cases at h={h}", tuple(sorted(offender)))

    if all(plus_rows):
        bases = []
        for row in rows:
            base = frozenset(x for x in row if x < h)
            if frozenset(b + kk * h for b in base for kk in range(g)) != row:
                raise DecompositionError(f"row {sorted(row)} is not R1 + {{0, {h}, ..., {(g - 1) * h}}}", tuple(sorted(row)))
            bases.append(base)
        inner = arrange_reduced_rows(bases, chain[:-1])
        return [[x + kk * h for kk in range(g) for x in inner_row] for inner_row in inner]

    bases = [frozenset(x % h for x in row) for row in rows]
    lifts = [{x % h: x for x in row} for row in rows]
    inner = arrange_reduced_rows(bases, chain[:-1])
    return [[lift[x] for x in inner_row] for inner_row, lift in zip(inner, lifts)]


def good_rows_matrix(rows: Sequence[Iterable[int]], chain: DivisorChain) -> NatMatrix:
    """
    Good arrangement of rows given as sets of naturals, without companion checks.

    The rows are fully reduced modulo n first and the result is mapped back to
    the original (possibly unreduced) elements.

    Raises:
        DecompositionError: If some row does not decompose along the chain
    """
    n = chain.n
    reduced_rows: list[frozenset[int]] = []
    originals: list[dict[int, int]] = []
    for row in rows:
        row_set = frozenset(row)
        lookup = {x % n: x for x in row_set}
        if len(lookup) != len(row_set):
            raise DecompositionError(f"row {sorted(row_set)} has two elements congruent modulo {n}", tuple(sorted(row_set)))
        reduced_rows.append(frozenset(lookup))
        originals.append(lookup)
    reduced = arrange_reduced_rows(reduced_rows, chain.chain)
    return NatMatrix.of([lookup[x] for x in row] for row, lookup in zip(reduced, originals))


def good_arrangement_rows(
    family: Sequence[FamilyMember],
    companion: FactorizationPair,
    chain: DivisorChain,
) -> NatMatrix:
    """
    The unique good arrangement of the union of the R_p with the R_p as rows.

    Args:
        family: Hajós pairs (R_p, T_p) of Z_n
        companion: Common Krasner companion (I, J)
        chain: Divisor chain of n defining the family

    Returns:
        m × ℓ matrix whose p-th row is an ordering of R_p

    Raises:
        NotHajosFamilyError: If the family does not share the companion
        DecompositionError: If a row does not decompose along the chain
    """
    members = _normalize_family(family)
    _validate_family(members, companion, chain)
    matrix = good_rows_matrix([r for r, _ in members], chain)
    logger.debug(f"Good row arrangement over chain {chain.render()}: {matrix.entries}")
    return matrix


def good_arrangement_columns(
    family: Sequence[FamilyMember],
    companion: FactorizationPair,
    chain: DivisorChain,
) -> NatMatrix:
    """Good arrangement with the R_p as columns: the transpose of the rows arrangement."""
    return good_arrangement_rows(family, companion, chain).transpose()


def replay_good_rows(matrix: NatMatrix, chain: DivisorChain) -> bool:
    """
    Check that a matrix is produced by the good-arrangement rules along the chain.

    Independent of the constructive path: the matrix is reduced modulo n and
    each level is matched against the union and substitution rules directly.
    """
    reduced = matrix.reduce(chain.n).rows()
    for row, original in zip(reduced, matrix.rows()):
        if len(set(row)) != len(row) or len(set(original)) != len(original):
            return False
    return _replay(reduced, chain.chain)


def _replay(rows: list[tuple[int, ...]], chain: tuple[int, ...]) -> bool:
    k = chain[-1]
    width = len(rows[0])
    if len(chain) == 1:
        return all(row == (0,) for row in rows)
    if len(chain) == 2:
        if width == 1:
            return all(0 <= row[0] < k for row in rows)
        return all(row == tuple(range(k)) for row in rows)
    h = chain[-2]
    g = k // h
    if any(len({x % h for x in row}) < len(row) for row in rows):
        if width % g:
            return False
        inner_width = width // g
        inner = [row[:inner_width] for row in rows]
        for row, base in zip(rows, inner):
            if any(x >= h for x in base):
                return False
            if row != tuple(x + kk * h for kk in range(g) for x in base):
                return False
        return _replay(inner, chain[:-1])
    return _replay([tuple(x % h for x in row) for row in rows], chain[:-1])
