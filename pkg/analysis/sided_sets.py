"""Completability predicates, left and right sets, and the induced system of factorizations."""

from collections import deque
from dataclasses import dataclass, field
from typing import Literal, Optional, Union

from analysis.recognizer import StarRecognizer, State
from codes.models import FiniteCode
from codes.predicates import is_code, is_maximal, letter_order
from common.exceptions import NoLetterOrderError, NotMaximalError
from common.logging_config import get_logger
from common.types import Word, sorted_set
from cyclic.factorization import is_factorization

logger = get_logger(__name__)

CodeOrRecognizer = Union[FiniteCode, StarRecognizer]


@dataclass(frozen=True)
class SidedSet:
    """Residue set a^P (left) or a^Q (right) of Z_n together with its generator word."""
    side: Literal["left", "right"]
    residues: frozenset[int]
    generator: Word
    n: int

    def to_json(self) -> dict:
        return {"side": self.side, "residues": sorted_set(self.residues), "generator": self.generator, "n": self.n}


@dataclass(frozen=True)
class SystemOfFactorizations:
    """The families ℙ of left sets and ℚ of right sets of a code for one letter."""
    letter: str
    n: int
    lefts: tuple[frozenset[int], ...]
    rights: tuple[frozenset[int], ...]
    left_generators: dict[frozenset[int], Word] = field(default_factory=dict, compare=False)
    right_generators: dict[frozenset[int], Word] = field(default_factory=dict, compare=False)

    def pairs(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        return [(p, q) for p in self.lefts for q in self.rights]

    def left_set(self, residues: frozenset[int]) -> SidedSet:
        return SidedSet("left", residues, self.left_generators.get(residues, ""), self.n)

    def right_set(self, residues: frozenset[int]) -> SidedSet:
        return SidedSet("right", residues, self.right_generators.get(residues, ""), self.n)

    def violations(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        """Pairs of ℙ × ℚ that are not factorizations of Z_n."""
        return [(p, q) for p, q in self.pairs() if not is_factorization(p, q, self.n)]

    def to_json(self) -> dict:
        return {
            "letter": self.letter,
            "n": self.n,
            "lefts": [sorted_set(p) for p in self.lefts],
            "rights": [sorted_set(q) for q in self.rights],
        }


def _recognizer(code: CodeOrRecognizer) -> StarRecognizer:
    return code if isinstance(code, StarRecognizer) else StarRecognizer(code)


def _order(recognizer: StarRecognizer, letter: str) -> int:
    n = letter_order(recognizer.code, letter)
    if n is None:
        raise NoLetterOrderError(f"no power of {letter!r} belongs to {recognizer.code.canonical()}")
    return n


def offset(code: FiniteCode, n: int) -> int:
    """The shift 2n|X| used by the definitions of left and right sets."""
    return 2 * n * code.max_length


def is_right_completable(word: Word, code: CodeOrRecognizer) -> bool:
    """Some v makes wv an element of X*."""
    recognizer = _recognizer(code)
    return recognizer.is_coreachable(recognizer.state_of(word))


def is_strongly_right_completable(word: Word, code: CodeOrRecognizer) -> bool:
    """For every u some v makes wuv an element of X*."""
    recognizer = _recognizer(code)
    return recognizer.is_strongly_completable(recognizer.state_of(word))


def _left_residues(recognizer: StarRecognizer, state: State, letter: str, n: int) -> frozenset[int]:
    state = recognizer.run(state, letter * offset(recognizer.code, n))
    found = set()
    for i in range(n):
        if recognizer.is_accepting(state):
            found.add(i)
        state = recognizer.step(state, letter)
    return frozenset(found)


def left_set_of(word: Word, code: CodeOrRecognizer, letter: str) -> Optional[SidedSet]:
    """
    P = {i in T | y a^{2n|X| + i} in X*} for a strongly right completable y.

    Returns:
        The left set, or None when y is not strongly right completable

    Raises:
        NoLetterOrderError: If no power of the letter is in X
    """
    recognizer = _recognizer(code)
    n = _order(recognizer, letter)
    state = recognizer.state_of(word)
    if not recognizer.is_strongly_completable(state):
        return None
    return SidedSet("left", _left_residues(recognizer, state, letter, n), word, n)


def _pairwise_condition(recognizer: StarRecognizer, residues: frozenset[int], letter: str) -> bool:
    ordered = sorted(residues)
    gaps = {j - i for index, i in enumerate(ordered) for j in ordered[index + 1:]}
    return not any(recognizer.in_residual(letter * gap) for gap in gaps)


def _shifted_starts(recognizer: StarRecognizer, letter: str, n: int) -> tuple[State, ...]:
    state = recognizer.run(recognizer.initial, letter * offset(recognizer.code, n))
    starts = []
    for _ in range(n):
        starts.append(state)
        state = recognizer.step(state, letter)
    return tuple(starts)


def _right_residues(recognizer: StarRecognizer, states: tuple[State, ...]) -> frozenset[int]:
    return frozenset(k for k, q in enumerate(states) if recognizer.is_coreachable(q))


def right_set_of(word: Word, code: CodeOrRecognizer, letter: str) -> Optional[SidedSet]:
    """
    Q = {k in T | a^{k + 2n|X|} x A* meets X*}, provided a^{j-i} is outside (X*)^{-1}X* for i < j in Q.

    Returns:
        The right set, or None when the pairwise condition fails

    Raises:
        NoLetterOrderError: If no power of the letter is in X
    """
    recognizer = _recognizer(code)
    n = _order(recognizer, letter)
    states = tuple(recognizer.run(q, word) for q in _shifted_starts(recognizer, letter, n))
    residues = _right_residues(recognizer, states)
    if not _pairwise_condition(recognizer, residues, letter):
        return None
    return SidedSet("right", residues, word, n)


def enumerate_system(code: CodeOrRecognizer, letter: str) -> SystemOfFactorizations:
    """
    All left and right sets of a maximal code.

    A left set depends on its generator only through the recognizer state
    the generator reaches, so one witness per strongly completable state is
    enough. A right set depends on x only through the tuple of states reached
    from the n shifted starts, and those tuples are explored breadth-first.
    Empty right residue sets are not factors of Z_n and are left out.

    Raises:
        NotMaximalError: If the word set is not a maximal code
        NoLetterOrderError: If no power of the letter is in X
    """
    recognizer = _recognizer(code)
    words = recognizer.code
    if not is_code(words) or not is_maximal(words):
        raise NotMaximalError(f"{words.canonical()} is not a maximal code")
    n = _order(recognizer, letter)

    left_generators: dict[frozenset[int], Word] = {}
    for state in recognizer.states:
        if recognizer.is_strongly_completable(state):
            residues = _left_residues(recognizer, state, letter, n)
            left_generators.setdefault(residues, recognizer.witness(state))

    right_generators: dict[frozenset[int], Word] = {}
    start = _shifted_starts(recognizer, letter, n)
    seen = {start: ""}
    queue = deque([start])
    while queue:
        states = queue.popleft()
        residues = _right_residues(recognizer, states)
        if not residues:
            logger.warning(f"Generator {seen[states]!r} of {words.canonical()} has no completable shift")
        elif residues not in right_generators and _pairwise_condition(recognizer, residues, letter):
            right_generators[residues] = seen[states]
        for c in recognizer.alphabet:
            following = tuple(recognizer.step(q, c) for q in states)
            if following not in seen:
                seen[following] = seen[states] + c
                queue.append(following)

    lefts = tuple(sorted(left_generators, key=sorted_set))
    rights = tuple(sorted(right_generators, key=sorted_set))
    logger.info(f"System of {words.canonical()} for {letter!r}: {len(lefts)} left sets, {len(rights)} right sets")
    return SystemOfFactorizations(letter, n, lefts, rights, left_generators, right_generators)
