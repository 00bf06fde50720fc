"""Divisor chains and prime-factor counts."""

from functools import lru_cache

from sympy import divisors, factorint

from common.exceptions import InvalidModulusError
from cyclic.models import DivisorChain


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidModulusError(f"modulus must be a positive natural, got {n!r}")


@lru_cache(maxsize=None)
def _chains(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((1,),)
    result: list[tuple[int, ...]] = []
    for d in divisors(n):
        if d == n:
            continue
        for prefix in _chains(d):
            result.append(prefix + (n,))
    return tuple(sorted(result))


def enumerate_chains(n: int) -> list[DivisorChain]:
    """
    All chains 1 = k_0 | k_1 | ... | k_s = n of distinct divisors, in lexicographic order.

    Raises:
        InvalidModulusError: If n is not a positive natural
    """
    _require_positive(n)
    return [DivisorChain(c) for c in _chains(n)]


def chain_count(n: int) -> int:
    _require_positive(n)
    return len(_chains(n))


def omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    _require_positive(n)
    return sum(factorint(n).values())
