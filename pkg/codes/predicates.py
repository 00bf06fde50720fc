"""Code-theoretic predicates: unique decipherability, prefix/suffix classes, maximality, letter order."""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from codes.models import FiniteCode
from common.exceptions import NotACodeError
from common.logging_config import get_logger
from common.types import Word

logger = get_logger(__name__)


@dataclass(frozen=True)
class CodeCheck:
    """
    Outcome of the unique-decipherability test.

    When the set is not a code, ``witness`` is a shortest word with two
    distinct factorizations and ``factorizations`` holds both of them.
    """
    is_code: bool
    witness: Optional[Word] = None
    factorizations: Optional[tuple[tuple[Word, ...], tuple[Word, ...]]] = None

    def __bool__(self) -> bool:
        return self.is_code

    def to_json(self) -> dict:
        return {
            "is_code": self.is_code,
            "witness": self.witness,
            "factorizations": [list(f) for f in self.factorizations] if self.factorizations else None,
        }


@dataclass(frozen=True)
class CodeClass:
    prefix: bool
    suffix: bool

    @property
    def bifix(self) -> bool:
        return self.prefix and self.suffix

    def to_json(self) -> dict:
        return {"prefix": self.prefix, "suffix": self.suffix, "bifix": self.bifix}


def is_code(code: FiniteCode) -> CodeCheck:
    """
    Sardinas–Patterson test run as a shortest-path search over dangling suffixes.

    A state is the suffix by which one partial factorization runs ahead of
    the other; its priority is the length of the longer side. Priorities never
    decrease along a transition, so the first state whose dangling suffix is a
    codeword closes a shortest ambiguous word.
    """
    words = code.sorted_words()
    heap: list[tuple[int, Word, tuple[Word, ...], tuple[Word, ...]]] = []
    for x in words:
        for y in words:
            if x != y and y.startswith(x):
                heapq.heappush(heap, (len(y), y[len(x):], (y,), (x,)))

    settled: set[Word] = set()
    while heap:
        priority, dangling, ahead, behind = heapq.heappop(heap)
        if dangling in settled:
            continue
        settled.add(dangling)
        if dangling in code.words:
            witness = "".join(ahead)
            logger.debug(f"Found ambiguous word {witness!r} of length {priority}")
            return CodeCheck(False, witness, (ahead, behind + (dangling,)))
        for z in words:
            if len(z) < len(dangling) and dangling.startswith(z):
                rest = dangling[len(z):]
                if rest not in settled:
                    heapq.heappush(heap, (priority, rest, ahead, behind + (z,)))
            elif len(z) > len(dangling) and z.startswith(dangling):
                rest = z[len(dangling):]
                if rest not in settled:
                    heapq.heappush(heap, (priority + len(rest), rest, behind + (z,), ahead))
    return CodeCheck(True)


def code_class(code: FiniteCode) -> CodeClass:
    words = code.sorted_words()
    prefix = not any(x != y and y.startswith(x) for x in words for y in words)
    suffix = not any(x != y and y.endswith(x) for x in words for y in words)
    return CodeClass(prefix, suffix)


def measure(code: FiniteCode) -> Fraction:
    """Uniform Bernoulli measure Σ_{x ∈ X} |A|^{-|x|}."""
    k = len(code.alphabet)
    return sum((Fraction(1, k ** len(w)) for w in code.words), Fraction(0))


def is_maximal(code: FiniteCode) -> bool:
    """
    A finite code is maximal iff its uniform measure is exactly 1.

    Raises:
        NotACodeError: If the word set is not a code
    """
    check = is_code(code)
    if not check:
        raise NotACodeError(f"{code.canonical()} is not a code: {check.witness!r} has two factorizations")
    return measure(code) == 1


def letter_order(code: FiniteCode, letter: str) -> Optional[int]:
    """The n with a^n in the code, or None."""
    powers = [len(w) for w in code.words if w and set(w) == {letter}]
    return min(powers) if powers else None


def in_star(word: Word, code: FiniteCode) -> bool:
    """Membership in X* by dynamic programming over the positions of the word."""
    lengths = sorted({len(w) for w in code.words})

    @lru_cache(maxsize=None)
    def reachable(position: int) -> bool:
        if position == len(word):
            return True
        return any(
            word[position:position + k] in code.words and reachable(position + k)
            for k in lengths
            if position + k <= len(word)
        )

    return reachable(0)
