"""The tables X_w of minimal X*-words a^i w a^j and the triangle inequalities."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional, Union

from analysis.recognizer import StarRecognizer
from arrangements.matrices import BayonetWord
from codes.models import FiniteCode
from codes.predicates import letter_order
from common.constants import XW_BOUND_RETRIES
from common.exceptions import BoundTooSmallError, InvalidSeparatorError, NoLetterOrderError, PreconditionError
from common.logging_config import get_logger
from common.types import Word

logger = get_logger(__name__)


@dataclass(frozen=True)
class BayonetTable:
    """X_w as a set of exponent pairs (i, j), for a^i w a^j."""
    separator: Word
    letter: str
    n: int
    elements: frozenset[tuple[int, int]]
    bound: int

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[tuple[int, int]]:
        return sorted(self.elements)

    def words(self) -> list[BayonetWord]:
        return [BayonetWord(i, self.separator, j, self.letter) for i, j in self.sorted_elements()]

    def to_json(self) -> dict:
        return {"w": self.separator, "Xw": [list(e) for e in self.sorted_elements()], "bound": self.bound}


@dataclass(frozen=True)
class TriangleResult:
    ok: bool
    violating_k: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def check_separator(word: Word, alphabet: str, letter: str) -> None:
    """
    Raises:
        InvalidSeparatorError: If the word is not in B(a*B)* for B = A minus the letter
    """
    if not word:
        raise InvalidSeparatorError("the separator must be nonempty")
    if word[0] == letter or word[-1] == letter:
        raise InvalidSeparatorError(f"separator {word!r} must begin and end with a letter other than {letter!r}")
    stray = set(word) - set(alphabet)
    if stray:
        raise InvalidSeparatorError(f"separator {word!r} uses letters {''.join(sorted(stray))} outside {alphabet!r}")


def _enumerate(recognizer: StarRecognizer, sep: Word, letter: str, bound: int) -> set[tuple[int, int]]:
    found = set()
    state = recognizer.initial
    for i in range(bound + 1):
        current = recognizer.run(state, sep)
        for j in range(bound + 1):
            if recognizer.is_accepting(current):
                found.add((i, j))
            current = recognizer.step(current, letter)
        state = recognizer.step(state, letter)
    return found


def _minimal(members: set[tuple[int, int]], n: int) -> set[tuple[int, int]]:
    return {(i, j) for i, j in members if (i - n, j) not in members and (i, j - n) not in members}


def compute_Xw(
    code: Union[FiniteCode, StarRecognizer],
    sep: Word,
    letter: str,
    bound: Optional[int] = None,
    retries: int = XW_BOUND_RETRIES,
) -> BayonetTable:
    """
    X_w: the words a^i w a^j of X* that are not a^n times, nor times a^n, another such word.

    Exponents are enumerated up to Bnd = 2n|X| + 2n; a survivor within n of
    the bound means the enumeration may be cut short, and the bound is
    doubled up to ``retries`` times.

    Raises:
        InvalidSeparatorError: If sep is not in B(a*B)*
        NoLetterOrderError: If no power of the letter is in X
        BoundTooSmallError: If survivors still touch the bound after every retry
    """
    recognizer = code if isinstance(code, StarRecognizer) else StarRecognizer(code)
    words = recognizer.code
    check_separator(sep, words.alphabet, letter)
    n = letter_order(words, letter)
    if n is None:
        raise NoLetterOrderError(f"no power of {letter!r} belongs to {words.canonical()}")
    current = bound if bound is not None else 2 * n * words.max_length + 2 * n

    for attempt in range(retries + 1):
        survivors = _minimal(_enumerate(recognizer, sep, letter, current), n)
        if all(i <= current - n and j <= current - n for i, j in survivors):
            logger.debug(f"X_{sep} of {words.canonical()} has {len(survivors)} elements (bound {current})")
            return BayonetTable(sep, letter, n, frozenset(survivors), current)
        logger.warning(f"X_{sep} touches the bound {current}, retrying with {2 * current} (attempt {attempt + 1})")
        current *= 2
    raise BoundTooSmallError(f"X_{sep} of {words.canonical()} still touches the bound {current // 2}")


def triangle_property(elements: Union[BayonetTable, Iterable[tuple[int, int]]]) -> TriangleResult:
    """#{(i, j) : i + j <= K} <= K + 1 for every K; the first failing K is reported."""
    pairs = elements.elements if isinstance(elements, BayonetTable) else frozenset(elements)
    if not pairs:
        return TriangleResult(True)
    sums = sorted(i + j for i, j in pairs)
    count = 0
    for k in range(sums[-1] + 1):
        while count < len(sums) and sums[count] <= k:
            count += 1
        if count > k + 1:
            return TriangleResult(False, k)
    return TriangleResult(True)


def triangle_conjecture_check(code: FiniteCode, letter: str = "a", other: str = "b") -> bool:
    """
    Card(X) <= max length for a set of words a^i b a^j.

    Raises:
        PreconditionError: If some word is not of the form a^i b a^j
    """
    for word in code.words:
        split = BayonetWord.from_word(word, letter)
        if split is None or split.sep != other:
            raise PreconditionError(f"{word!r} is not of the form {letter}^i {other} {letter}^j")
    holds = len(code) <= code.max_length
    if not holds:
        logger.warning(f"{code.canonical()} has more words than its maximal length")
    return holds
