"""Domain models for finite word sets and codes."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

from algebra.noncommutative import NoncommutativePolynomial
from common.exceptions import FactorCodesError, LetterNotInAlphabetError
from common.types import Word, sorted_words


@dataclass(frozen=True)
class FiniteCode:
    """
    A finite set of nonempty words over a declared alphabet.

    The name follows the usage of the library: most callers hold codes, but
    the predicates in codes.predicates accept any finite word set.
    """
    words: frozenset[Word]
    alphabet: str

    def __post_init__(self) -> None:
        words = frozenset(self.words)
        alphabet = "".join(sorted(set(self.alphabet)))
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "alphabet", alphabet)
        if not alphabet:
            raise LetterNotInAlphabetError("a code needs a nonempty alphabet")
        if "" in words:
            raise FactorCodesError("a code cannot contain the empty word")
        for word in words:
            stray = set(word) - set(alphabet)
            if stray:
                raise LetterNotInAlphabetError(
                    f"word {word!r} uses letters {''.join(sorted(stray))} outside alphabet {alphabet}"
                )

    @classmethod
    def of(cls, words: Iterable[Word], alphabet: Optional[Iterable[str]] = None) -> "FiniteCode":
        """Build a code; the alphabet defaults to the letters used by the words."""
        word_set = frozenset(words)
        letters = set(alphabet) if alphabet is not None else {ch for w in word_set for ch in w}
        return cls(word_set, "".join(sorted(letters)))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def sorted_words(self) -> list[Word]:
        return sorted_words(self.words)

    @property
    def max_length(self) -> int:
        """|X|: the length of a longest word."""
        return max((len(w) for w in self.words), default=0)

    def polynomial(self) -> NoncommutativePolynomial:
        """The characteristic polynomial of the word set."""
        return NoncommutativePolynomial.from_words(self.words, self.alphabet)

    def canonical(self) -> str:
        """Canonical serialization, used to sort and deduplicate codes."""
        return f"{self.alphabet}:{','.join(self.sorted_words())}"

    def to_json(self) -> dict:
        return {"alphabet": self.alphabet, "words": self.sorted_words()}
