"""Seeded generators of finite maximal codes with known positive factorizations."""

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional

from codes.factorizing import build_code_from_PS, code_from_ec2
from codes.models import FiniteCode
from common.constants import DEFAULT_CORPUS_MAX_ORDER, DEFAULT_CORPUS_MAX_WORDS, DEFAULT_SEED
from common.exceptions import NotFactorizingError
from common.logging_config import get_logger
from common.types import Word, sorted_words
from cyclic.krasner import krasner_pairs

logger = get_logger(__name__)

GENERATORS = ("prefix", "suffix", "krasner", "random")


@dataclass(frozen=True)
class CorpusEntry:
    code: FiniteCode
    p: frozenset[Word]
    s: frozenset[Word]
    origin: str

    def to_json(self) -> dict:
        return {
            "code": self.code.to_json(),
            "P": sorted_words(self.p),
            "S": sorted_words(self.s),
            "origin": self.origin,
        }


def _proper_prefixes(words: frozenset[Word]) -> frozenset[Word]:
    return frozenset(w[:k] for w in words for k in range(len(w)))


def _proper_suffixes(words: frozenset[Word]) -> frozenset[Word]:
    return frozenset(w[k:] for w in words for k in range(1, len(w) + 1))


def complete_prefix_codes(alphabet: str = "ab", max_depth: int = 3) -> list[FiniteCode]:
    """Every maximal prefix code given by a complete tree of depth at most max_depth."""
    letters = "".join(sorted(set(alphabet)))

    def subtrees(prefix: Word, depth_left: int) -> list[frozenset[Word]]:
        options = [frozenset({prefix})]
        if depth_left > 0:
            children = [subtrees(prefix + c, depth_left - 1) for c in letters]
            options.extend(frozenset().union(*choice) for choice in product(*children))
        return options

    if max_depth < 1:
        return []
    children = [subtrees(c, max_depth - 1) for c in letters]
    codes = [FiniteCode(frozenset().union(*choice), letters) for choice in product(*children)]
    return sorted(codes, key=FiniteCode.canonical)


def random_prefix_code(rng: random.Random, alphabet: str = "ab", max_depth: int = 3) -> FiniteCode:
    """A maximal prefix code read off a random complete tree."""
    letters = "".join(sorted(set(alphabet)))
    leaves: set[Word] = set()
    pending = [c for c in letters]
    while pending:
        node = pending.pop()
        if len(node) < max_depth and rng.random() < 0.5:
            pending.extend(node + c for c in letters)
        else:
            leaves.add(node)
    return FiniteCode(frozenset(leaves), letters)


def prefix_entry(rng: random.Random, max_order: int) -> Optional[CorpusEntry]:
    code = random_prefix_code(rng, "ab", max(1, min(max_order, 3)))
    return CorpusEntry(code, _proper_prefixes(code.words), frozenset({""}), "prefix")


def suffix_entry(rng: random.Random, max_order: int) -> Optional[CorpusEntry]:
    prefix = random_prefix_code(rng, "ab", max(1, min(max_order, 3)))
    code = FiniteCode(frozenset(w[::-1] for w in prefix.words), prefix.alphabet)
    return CorpusEntry(code, frozenset({""}), _proper_suffixes(code.words), "suffix")


def krasner_entry(rng: random.Random, max_order: int) -> Optional[CorpusEntry]:
    """
    A code from a Krasner pair (I, J) with interval decorations on one side.

    P = a^I + Σ_{i ∈ I'} a^i b a^{0..t_i-1} with S = a^J, or the mirror
    construction on S; both are always factorizing.
    """
    n = rng.randint(1, max_order)
    pair = rng.choice(krasner_pairs(n))
    if rng.random() < 0.5:
        decorated = {i: range(rng.randint(1, 2)) for i in sorted(pair.left) if rng.random() < 0.5}
        built = code_from_ec2(pair.left, pair.right, decorated, {})
    else:
        decorated = {j: range(rng.randint(1, 2)) for j in sorted(pair.right) if rng.random() < 0.5}
        built = code_from_ec2(pair.left, pair.right, {}, decorated)
    return CorpusEntry(built.code, built.p, built.s, "krasner")


def random_entry(rng: random.Random, max_order: int) -> Optional[CorpusEntry]:
    """One random attempt at word sets P, S of short words; None when the product is not a code."""
    pool = ["a", "b", "aa", "ab", "ba", "bb"]
    p = {""} | {w for w in pool if rng.random() < 0.25}
    s = {""} | {w for w in pool if rng.random() < 0.25}
    try:
        built = build_code_from_PS(p, s, "ab")
    except NotFactorizingError:
        return None
    return CorpusEntry(built.code, built.p, built.s, "random")


_FACTORIES: dict[str, Callable[[random.Random, int], Optional[CorpusEntry]]] = {
    "prefix": prefix_entry,
    "suffix": suffix_entry,
    "krasner": krasner_entry,
    "random": random_entry,
}


def generate_corpus(
    size: int,
    seed: int = DEFAULT_SEED,
    max_order: int = DEFAULT_CORPUS_MAX_ORDER,
    max_words: int = DEFAULT_CORPUS_MAX_WORDS,
    max_attempts: Optional[int] = None,
) -> list[CorpusEntry]:
    """
    Generate up to ``size`` distinct factorizing codes, sorted by canonical serialization.

    Generation stops early after ``max_attempts`` generator calls (50 per
    requested code by default), so small code spaces do not loop forever.
    """
    if size <= 0:
        return []
    limit = max_attempts if max_attempts is not None else 50 * size
    rng = random.Random(seed)
    seen: dict[str, CorpusEntry] = {}
    attempts = 0
    while len(seen) < size and attempts < limit:
        origin = GENERATORS[attempts % len(GENERATORS)]
        attempts += 1
        entry = _FACTORIES[origin](rng, max_order)
        if entry is None or len(entry.code) > max_words:
            continue
        seen.setdefault(entry.code.canonical(), entry)
    logger.info(f"Generated {len(seen)} codes in {attempts} attempts (seed={seed})")
    return sorted(seen.values(), key=lambda e: e.code.canonical())
