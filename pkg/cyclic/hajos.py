"""Hajós factorizations of Z_n and their Krasner companions."""

from collections.abc import Iterable
from functools import lru_cache
from itertools import product
from typing import Optional

from sympy import divisors

from algebra.exponent import ExponentPolynomial
from algebra.univariate import a_minus_one, exact_divide, poly_coefficients
from common.logging_config import get_logger
from cyclic.chains import enumerate_chains
from cyclic.factorization import check_bound, is_factorization, residues
from cyclic.krasner import krasner_pairs
from cyclic.models import DivisorChain, FactorizationPair

logger = get_logger(__name__)


def circ(s: Iterable[int], t: Iterable[int], n: Optional[int] = None) -> set[frozenset[int]]:
    """
    S ∘ T: every set {s_i + t_i} where each s_i picks some t_i from T.

    Args:
        s: The set S = {s_1, ..., s_q}
        t: The set T the offsets are drawn from
        n: If given, sums are reduced modulo n

    Returns:
        Deduplicated family of sets
    """
    s_values = sorted(set(s))
    t_values = sorted(set(t))
    if not s_values:
        return {frozenset()}
    family: set[frozenset[int]] = set()
    for choice in product(t_values, repeat=len(s_values)):
        sums = (x + y for x, y in zip(s_values, choice))
        family.add(frozenset(v % n for v in sums) if n else frozenset(sums))
    return family


def _sumset(left: Iterable[int], right: Iterable[int]) -> frozenset[int]:
    return frozenset(x + y for x in left for y in right)


@lru_cache(maxsize=None)
def _hajos_recursive(n: int) -> tuple[tuple[frozenset[int], frozenset[int], tuple[int, ...]], ...]:
    if n == 1:
        return ((frozenset({0}), frozenset({0}), (1,)),)
    found: dict[tuple[frozenset[int], frozenset[int]], tuple[int, ...]] = {}
    for h in divisors(n):
        if h == n:
            continue
        g = n // h
        step = frozenset(range(0, n, h))
        for base_r, base_t, chain in _hajos_recursive(h):
            extended = chain + (n,)
            r_new = _sumset(base_r, step)
            for t_new in circ(base_t, step):
                for pair in ((r_new, t_new), (t_new, r_new)):
                    if pair not in found or extended < found[pair]:
                        found[pair] = extended
    ordered = sorted(found.items(), key=lambda item: (sorted(item[0][0]), sorted(item[0][1])))
    return tuple((r, t, chain) for (r, t), chain in ordered)


def hajos_enumerate(n: int, bound: Optional[int] = None) -> list[FactorizationPair]:
    """
    All Hajós factorizations of Z_n built by the chain recursion.

    Condition 1 (R = {0..n-1}, T = {t}) is the h = 1 step of condition 2;
    both orientations are produced at every step. Each pair carries the
    smallest chain defining it.

    Raises:
        EnumerationBoundError: If n is above the bound
    """
    check_bound(n, bound)
    pairs = [
        FactorizationPair(r, t, n, chain=DivisorChain(chain), kind="hajos", verified=True)
        for r, t, chain in _hajos_recursive(n)
    ]
    logger.info(f"Enumerated {len(pairs)} Hajós factorizations of Z_{n}")
    return pairs


def hcg_families(chain: DivisorChain) -> tuple[set[frozenset[int]], set[frozenset[int]]]:
    """
    Evaluate the alternating "·" / "∘" products of the chain quotients.

    R-sets use "·" at odd steps and "∘" at even steps, T-sets the opposite.
    """
    r_family: set[frozenset[int]] = {frozenset({0})}
    t_family: set[frozenset[int]] = {frozenset({0})}
    for j, step in enumerate(chain.step_sets(), start=1):
        if j % 2 == 1:
            r_family = {_sumset(s, step) for s in r_family}
            t_family = {c for s in t_family for c in circ(s, step)}
        else:
            r_family = {c for s in r_family for c in circ(s, step)}
            t_family = {_sumset(s, step) for s in t_family}
    return r_family, t_family


def hcg_pairs(n: int) -> set[tuple[frozenset[int], frozenset[int]]]:
    """Pairs (R, T) in the chain families of some chain of n, in either orientation."""
    pairs: set[tuple[frozenset[int], frozenset[int]]] = set()
    for chain in enumerate_chains(n):
        r_family, t_family = hcg_families(chain)
        for r in r_family:
            for t in t_family:
                pairs.add((r, t))
                pairs.add((t, r))
    return pairs


def solve_eq_EF(r: Iterable[int], i: Iterable[int]) -> Optional[frozenset[int]]:
    """
    Solve a^R = a^I(1 + a^M(a - 1)) for M.

    Returns:
        M when (a^R - a^I) / (a^I (a - 1)) is exact with 0/1 coefficients, otherwise None
    """
    r_poly = ExponentPolynomial.from_set(r)
    i_poly = ExponentPolynomial.from_set(i)
    if r_poly == i_poly:
        return frozenset()
    if i_poly.is_zero():
        return None
    numerator = r_poly.to_sympy() - i_poly.to_sympy()
    denominator = i_poly.to_sympy() * a_minus_one()
    quotient = exact_divide(numerator, denominator)
    if quotient is None:
        return None
    coefficients = poly_coefficients(quotient)
    if any(c != 1 for c in coefficients.values()):
        return None
    return frozenset(coefficients)


def _reduce_injective(values: Iterable[int], n: int) -> Optional[frozenset[int]]:
    value_set = set(values)
    reduced = residues(value_set, n)
    return reduced if len(reduced) == len(value_set) else None


def is_hajos(r: Iterable[int], t: Iterable[int], n: int) -> bool:
    """
    Decide whether (R, T) is a Hajós factorization of Z_n.

    R and T are first reduced modulo n; a reduction that merges elements is
    not Hajós. The test is the polynomial characterization: some Krasner pair
    (I, J) of order n admits M and L with a^R = a^I(1 + a^M(a - 1)) and
    a^T = a^J(1 + a^L(a - 1)).
    """
    r_red = _reduce_injective(r, n)
    t_red = _reduce_injective(t, n)
    if r_red is None or t_red is None:
        return False
    return _is_hajos_reduced(r_red, t_red, n)


@lru_cache(maxsize=65536)
def _is_hajos_reduced(r_red: frozenset[int], t_red: frozenset[int], n: int) -> bool:
    for pair in krasner_pairs(n):
        # evaluating the equations at a = 1 gives |R| = |I| and |T| = |J|
        if len(pair.left) != len(r_red) or len(pair.right) != len(t_red):
            continue
        if solve_eq_EF(r_red, pair.left) is not None and solve_eq_EF(t_red, pair.right) is not None:
            return True
    return False


def krasner_companions(r: Iterable[int], t: Iterable[int], n: int) -> list[FactorizationPair]:
    """
    Krasner pairs (I, J) of order n with (I, T) and (R, J) both factorizations of Z_n.

    Returns an empty list when (R, T) is not Hajós.
    """
    r_set, t_set = set(r), set(t)
    companions = [
        pair for pair in krasner_pairs(n)
        if is_factorization(pair.left, t_set, n) and is_factorization(r_set, pair.right, n)
    ]
    return sorted(companions, key=FactorizationPair.sort_key)
