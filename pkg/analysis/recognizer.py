"""Deterministic complete automaton recognizing X* for a finite word set X."""

from collections import deque
from collections.abc import Iterable
from itertools import product
from typing import Optional

from codes.models import FiniteCode
from codes.predicates import in_star
from common.logging_config import get_logger
from common.types import Word

logger = get_logger(__name__)

State = int
Positions = frozenset[Word]


class StarRecognizer:
    """
    Subset construction over the proper prefixes of the code words.

    A position u means "a factorization is open with u read from the current
    word"; the empty position is a factorization boundary, so a state is
    accepting iff it holds the empty position. The empty position set is the
    sink. States are numbered in breadth-first order from the initial state 0
    and each carries a shortest word reaching it.
    """

    def __init__(self, code: FiniteCode):
        self.code = code
        self.alphabet = code.alphabet
        self._prefixes = frozenset(w[:k] for w in code.words for k in range(len(w)))
        self._positions: list[Positions] = []
        self._witnesses: list[Word] = []
        self._index: dict[Positions, State] = {}
        self._delta: list[dict[str, State]] = []
        self._build()
        self._coreachable = self._compute_coreachable()
        self._strong = self._compute_strong()
        logger.debug(f"Recognizer of {code.canonical()}* has {len(self._positions)} states")

    def _add_state(self, positions: Positions, witness: Word) -> State:
        state = len(self._positions)
        self._positions.append(positions)
        self._witnesses.append(witness)
        self._index[positions] = state
        self._delta.append({})
        return state

    def _step_positions(self, positions: Positions, letter: str) -> Positions:
        targets = set()
        for u in positions:
            v = u + letter
            if v in self.code.words:
                targets.add("")
            if v in self._prefixes:
                targets.add(v)
        return frozenset(targets)

    def _build(self) -> None:
        self._add_state(frozenset({""}), "")
        queue = deque([0])
        while queue:
            state = queue.popleft()
            for letter in self.alphabet:
                target = self._step_positions(self._positions[state], letter)
                if target not in self._index:
                    queue.append(self._add_state(target, self._witnesses[state] + letter))
                self._delta[state][letter] = self._index[target]

    def _reverse_closure(self, seeds: Iterable[State]) -> set[State]:
        incoming: dict[State, list[State]] = {q: [] for q in self.states}
        for q in self.states:
            for target in self._delta[q].values():
                incoming[target].append(q)
        found = set(seeds)
        queue = deque(found)
        while queue:
            q = queue.popleft()
            for source in incoming[q]:
                if source not in found:
                    found.add(source)
                    queue.append(source)
        return found

    def _compute_coreachable(self) -> frozenset[State]:
        return frozenset(self._reverse_closure(q for q in self.states if self.is_accepting(q)))

    def _compute_strong(self) -> frozenset[State]:
        dead = [q for q in self.states if q not in self._coreachable]
        return frozenset(self.states) - frozenset(self._reverse_closure(dead))

    # structure

    @property
    def states(self) -> range:
        return range(len(self._positions))

    @property
    def initial(self) -> State:
        return 0

    def __len__(self) -> int:
        return len(self._positions)

    def positions(self, state: State) -> Positions:
        return self._positions[state]

    def witness(self, state: State) -> Word:
        """A shortest word leading from the initial state to ``state``."""
        return self._witnesses[state]

    def is_accepting(self, state: State) -> bool:
        return "" in self._positions[state]

    def accepting_states(self) -> list[State]:
        return [q for q in self.states if self.is_accepting(q)]

    def sink(self) -> Optional[State]:
        return self._index.get(frozenset())

    def step(self, state: State, letter: str) -> State:
        return self._delta[state][letter]

    def run(self, state: State, word: Word) -> State:
        for letter in word:
            state = self._delta[state][letter]
        return state

    def state_of(self, word: Word) -> State:
        return self.run(self.initial, word)

    # decisions

    def accepts(self, word: Word) -> bool:
        return self.is_accepting(self.state_of(word))

    def is_coreachable(self, state: State) -> bool:
        return state in self._coreachable

    def is_strongly_completable(self, state: State) -> bool:
        """Every state reachable from ``state`` can still reach an accepting state."""
        return state in self._strong

    def in_residual(self, word: Word) -> bool:
        """Membership of ``word`` in (X*)^{-1}X*: some v in X* has vw in X*."""
        return any(self.is_accepting(self.run(q, word)) for q in self.accepting_states())

    def validate(self, max_length: Optional[int] = None) -> list[Word]:
        """
        Compare acceptance with a direct membership test on every word up to ``max_length``.

        Returns:
            The words on which the two disagree (empty when the automaton is correct)
        """
        limit = 2 * self.code.max_length if max_length is None else max_length
        disagreements = []
        for length in range(limit + 1):
            for letters in product(self.alphabet, repeat=length):
                word = "".join(letters)
                if self.accepts(word) != in_star(word, self.code):
                    disagreements.append(word)
        return disagreements


def build_star_recognizer(code: FiniteCode) -> StarRecognizer:
    return StarRecognizer(code)
