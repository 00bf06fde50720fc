"""Factorizations (T, R) of Z_n: every residue is uniquely t + r."""

from collections.abc import Iterable
from itertools import combinations
from typing import Optional

from sympy import divisors

from common.constants import DEFAULT_N_BOUND
from common.exceptions import EnumerationBoundError, InvalidModulusError
from common.logging_config import get_logger
from cyclic.models import FactorizationPair

logger = get_logger(__name__)


def _require_modulus(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidModulusError(f"modulus must be a positive natural, got {n!r}")


def check_bound(n: int, bound: Optional[int]) -> None:
    """
    Raises:
        InvalidModulusError: If n is not a positive natural
        EnumerationBoundError: If n exceeds the enumeration bound
    """
    _require_modulus(n)
    limit = DEFAULT_N_BOUND if bound is None else bound
    if n > limit:
        raise EnumerationBoundError(f"n={n} exceeds the enumeration bound {limit}")


def residues(values: Iterable[int], n: int) -> frozenset[int]:
    """Set of residues modulo n, i.e. X_(n)."""
    _require_modulus(n)
    return frozenset(v % n for v in values)


def is_factorization(left: Iterable[int], right: Iterable[int], n: int) -> bool:
    """
    True iff every z in {0..n-1} is t + r (mod n) for exactly one (t, r).

    Raises:
        InvalidModulusError: If n < 1
    """
    _require_modulus(n)
    left_set, right_set = set(left), set(right)
    if len(left_set) * len(right_set) != n:
        return False
    seen: set[int] = set()
    for t in left_set:
        for r in right_set:
            z = (t + r) % n
            if z in seen:
                return False
            seen.add(z)
    return len(seen) == n


def complements(left: frozenset[int], n: int) -> list[frozenset[int]]:
    """
    All R ⊆ {0..n-1} with (left, R) a factorization of Z_n.

    Exact cover of Z_n by translates of ``left``: the smallest uncovered residue
    fixes the next translate, so every R is produced once.
    """
    _require_modulus(n)
    reduced = sorted({t % n for t in left})
    if len(reduced) != len(left) or not reduced or n % len(reduced):
        return []
    results: list[frozenset[int]] = []

    def extend(covered: frozenset[int], chosen: frozenset[int]) -> None:
        if len(covered) == n:
            results.append(chosen)
            return
        z = next(v for v in range(n) if v not in covered)
        for t in reduced:
            r = (z - t) % n
            translate = {(s + r) % n for s in reduced}
            if translate.isdisjoint(covered):
                extend(covered | translate, chosen | {r})

    extend(frozenset(), frozenset())
    return sorted(set(results), key=sorted)


def enumerate_factorizations(n: int, bound: Optional[int] = None) -> list[FactorizationPair]:
    """
    All factorizations (T, R) of Z_n with T, R ⊆ {0..n-1}, in canonical order.

    Args:
        n: Modulus
        bound: Enumeration bound (defaults to DEFAULT_N_BOUND)

    Raises:
        EnumerationBoundError: If n is above the bound
    """
    check_bound(n, bound)
    pairs: list[FactorizationPair] = []
    for size in divisors(n):
        for left in combinations(range(n), size):
            left_set = frozenset(left)
            for right in complements(left_set, n):
                pairs.append(FactorizationPair(left_set, right, n, kind="factorization", verified=True))
    pairs.sort(key=FactorizationPair.sort_key)
    logger.info(f"Enumerated {len(pairs)} factorizations of Z_{n}")
    return pairs
