"""Shared word and set helpers used across packages."""

from collections.abc import Iterable

Word = str
"""A word over a finite alphabet, one character per letter. The empty word is ``""``."""


def word_key(word: Word) -> tuple[int, str]:
    """Sort key for the canonical length-then-lexicographic word order."""
    return (len(word), word)


def sorted_words(words: Iterable[Word]) -> list[Word]:
    """Return words in canonical order."""
    return sorted(words, key=word_key)


def sorted_set(values: Iterable[int]) -> list[int]:
    """Serialize a set of naturals as a sorted ascending list."""
    return sorted(set(values))


def render_word(word: Word) -> str:
    """Human rendering of a word; the empty word is shown as ``1``."""
    return word if word else "1"
