"""Krasner factorizations: a^I · a^J = (a^n - 1)/(a - 1)."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal, Optional

from algebra.exponent import ExponentPolynomial
from common.exceptions import ContractViolationError
from common.logging_config import get_logger
from cyclic.chains import enumerate_chains
from cyclic.models import DivisorChain, FactorizationPair

logger = get_logger(__name__)


def _sumset(left: Iterable[int], right: Iterable[int]) -> frozenset[int]:
    return frozenset(x + y for x in left for y in right)


def krasner_from_chain(chain: DivisorChain) -> FactorizationPair:
    """
    Krasner pair of a divisor chain.

    I collects the quotients (a^{k_j}-1)/(a^{k_{j-1}}-1) of even index j and J
    those of odd index (1 <= j <= s); an empty product is {0}.
    """
    left: frozenset[int] = frozenset({0})
    right: frozenset[int] = frozenset({0})
    for j, step in enumerate(chain.step_sets(), start=1):
        if j % 2 == 0:
            left = _sumset(left, step)
        else:
            right = _sumset(right, step)
    return FactorizationPair(left, right, chain.n, chain=chain, kind="krasner", verified=True)


def is_krasner(left: Iterable[int], right: Iterable[int], n: int) -> bool:
    """True iff a^I · a^J = 1 + a + ... + a^{n-1} exactly, with no modular reduction."""
    if n < 1:
        return False
    product = ExponentPolynomial.from_set(left) * ExponentPolynomial.from_set(right)
    return product == ExponentPolynomial.interval(n)


def enumerate_krasner(n: int) -> list[FactorizationPair]:
    """One Krasner pair per divisor chain of n, in chain order."""
    seen: set[FactorizationPair] = set()
    pairs: list[FactorizationPair] = []
    for chain in enumerate_chains(n):
        pair = krasner_from_chain(chain)
        if pair not in seen:
            seen.add(pair)
            pairs.append(pair)
    logger.debug(f"Z_{n} has {len(pairs)} chain-derived Krasner pairs")
    return pairs


def krasner_pairs(n: int) -> list[FactorizationPair]:
    """All ordered Krasner pairs of order n: both orientations of every chain-derived pair."""
    seen: set[FactorizationPair] = set()
    pairs: list[FactorizationPair] = []
    for pair in enumerate_krasner(n):
        for candidate in (pair, pair.swapped()):
            if candidate not in seen:
                seen.add(candidate)
                pairs.append(candidate)
    return pairs


def chain_of_krasner(left: Iterable[int], right: Iterable[int], n: int) -> Optional[tuple[DivisorChain, bool]]:
    """
    Recover the chain defining a Krasner pair.

    Returns:
        (chain, swapped) where swapped tells whether (left, right) is the
        reversed orientation of krasner_from_chain(chain); None if not Krasner
    """
    target = FactorizationPair(frozenset(left), frozenset(right), n)
    for chain in enumerate_chains(n):
        pair = krasner_from_chain(chain)
        if pair == target:
            return chain, False
        if pair.swapped() == target:
            return chain, True
    return None


@dataclass(frozen=True)
class KrasnerDecomposition:
    """
    Last-step decomposition of a Krasner pair of order n = g·h.

    ``side`` names the coordinate equal to base + {0, h, ..., (g-1)h}; the pair
    made of ``base`` and the other coordinate is Krasner of order h.
    """
    side: Literal["left", "right"]
    base: frozenset[int]
    other: frozenset[int]
    h: int
    g: int
    chain: DivisorChain

    def base_pair(self) -> FactorizationPair:
        if self.side == "left":
            return FactorizationPair(self.base, self.other, self.h, chain=self.chain.prefix(), kind="krasner")
        return FactorizationPair(self.other, self.base, self.h, chain=self.chain.prefix(), kind="krasner")


def krasner_decompose(left: Iterable[int], right: Iterable[int], n: int) -> KrasnerDecomposition:
    """
    Split a Krasner pair of order n > 1 along the last step h = k_{s-1} of its chain.

    Raises:
        ContractViolationError: If the pair is not Krasner or n = 1
    """
    left_set, right_set = frozenset(left), frozenset(right)
    found = chain_of_krasner(left_set, right_set, n)
    if found is None:
        raise ContractViolationError(f"({sorted(left_set)}, {sorted(right_set)}) is not a Krasner pair of order {n}")
    chain, _ = found
    if chain.length == 0:
        raise ContractViolationError("the Krasner pair of order 1 has no decomposition")
    h = chain.chain[-2]
    g = n // h
    step = frozenset(range(0, n, h))
    matches: list[KrasnerDecomposition] = []
    for side, candidate, other in (("left", left_set, right_set), ("right", right_set, left_set)):
        base = frozenset(v for v in candidate if v < h)
        if _sumset(base, step) == candidate and len(base) * g == len(candidate) and is_krasner(base, other, h):
            matches.append(KrasnerDecomposition(side, base, other, h, g, chain))
    if len(matches) != 1:
        raise ContractViolationError(
            f"expected exactly one decomposable side for ({sorted(left_set)}, {sorted(right_set)}) at h={h}, found {len(matches)}"
        )
    return matches[0]
