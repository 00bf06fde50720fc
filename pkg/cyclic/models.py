"""Value types for factorizations of cyclic groups."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Literal, Optional

from common.exceptions import InvalidChainError

PairKind = Literal["factorization", "krasner", "hajos"]


@dataclass(frozen=True)
class DivisorChain:
    """
    A chain k_0 = 1 | k_1 | ... | k_s = n of positive distinct divisors of n.
    """
    chain: tuple[int, ...]

    def __post_init__(self) -> None:
        chain = tuple(self.chain)
        object.__setattr__(self, "chain", chain)
        if not chain:
            raise InvalidChainError("a divisor chain cannot be empty")
        if chain[0] != 1:
            raise InvalidChainError(f"a divisor chain starts at 1, got {chain[0]}")
        for previous, current in zip(chain, chain[1:]):
            if current <= previous or current % previous:
                raise InvalidChainError(f"{previous} | {current} is not a proper divisibility step in {chain}")

    @classmethod
    def of(cls, *values: int) -> "DivisorChain":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return self.chain[-1]

    @property
    def length(self) -> int:
        """Number of steps s."""
        return len(self.chain) - 1

    def step_sets(self) -> list[frozenset[int]]:
        """The sets {0, k_{j-1}, ..., k_j - k_{j-1}} of the quotients (a^{k_j}-1)/(a^{k_{j-1}}-1), j = 1..s."""
        return [
            frozenset(range(0, current, previous))
            for previous, current in zip(self.chain, self.chain[1:])
        ]

    def prefix(self) -> "DivisorChain":
        """The chain without its last element, k_0 | ... | k_{s-1}."""
        if self.length == 0:
            raise InvalidChainError("the chain (1) has no proper prefix")
        return DivisorChain(self.chain[:-1])

    def extend(self, n: int) -> "DivisorChain":
        return DivisorChain(self.chain + (n,))

    def render(self) -> str:
        return "|".join(str(k) for k in self.chain)


@dataclass(frozen=True)
class FactorizationPair:
    """
    A pair (left, right) of finite sets of naturals together with a modulus n.

    ``chain`` and ``kind`` annotate how the pair was produced and do not take
    part in equality, so pairs compare as plain set pairs.
    """
    left: frozenset[int]
    right: frozenset[int]
    n: int
    chain: Optional[DivisorChain] = field(default=None, compare=False)
    kind: PairKind = field(default="factorization", compare=False)
    verified: bool = field(default=False, compare=False)

    @classmethod
    def of(
        cls,
        left: Iterable[int],
        right: Iterable[int],
        n: int,
        chain: Optional[DivisorChain] = None,
        kind: PairKind = "factorization",
        verified: bool = False,
    ) -> "FactorizationPair":
        return cls(frozenset(left), frozenset(right), n, chain, kind, verified)

    def swapped(self) -> "FactorizationPair":
        return FactorizationPair(self.right, self.left, self.n, self.chain, self.kind, self.verified)

    def unordered(self) -> frozenset[frozenset[int]]:
        """Orientation-insensitive view used for comparisons."""
        return frozenset({self.left, self.right})

    def sort_key(self) -> tuple[list[int], list[int]]:
        return (sorted(self.left), sorted(self.right))

    def to_json(self) -> dict:
        data: dict = {
            "n": self.n,
            "left": sorted(self.left),
            "right": sorted(self.right),
            "kind": self.kind,
        }
        if self.chain is not None:
            data["chain"] = list(self.chain.chain)
        return data

    def render(self) -> str:
        left = ",".join(str(v) for v in sorted(self.left))
        right = ",".join(str(v) for v in sorted(self.right))
        return f"({{{left}}}, {{{right}}})"
