"""Rectangular matrices over naturals and over bayonet words a^i w a^j."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

from common.exceptions import ArrangementError


def _as_rows(entries: Iterable[Iterable]) -> tuple[tuple, ...]:
    rows = tuple(tuple(row) for row in entries)
    if not rows or not rows[0]:
        raise ArrangementError("a matrix needs at least one row and one column")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ArrangementError("matrix rows have different lengths")
    return rows


@dataclass(frozen=True)
class NatMatrix:
    """m × ℓ matrix of naturals, stored row-major."""
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_rows(self.entries))

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "NatMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def column(cls, values: Iterable[int]) -> "NatMatrix":
        return cls(tuple((v,) for v in values))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def ell(self) -> int:
        return len(self.entries[0])

    def row(self, p: int) -> tuple[int, ...]:
        return self.entries[p]

    def col(self, q: int) -> tuple[int, ...]:
        return tuple(row[q] for row in self.entries)

    def rows(self) -> list[tuple[int, ...]]:
        return list(self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(q) for q in range(self.ell)]

    def row_sets(self) -> list[frozenset[int]]:
        return [frozenset(row) for row in self.entries]

    def column_sets(self) -> list[frozenset[int]]:
        return [frozenset(column) for column in self.columns()]

    def transpose(self) -> "NatMatrix":
        return NatMatrix(tuple(self.columns()))

    def reduce(self, n: int) -> "NatMatrix":
        """A_(n): every entry replaced by its residue modulo n."""
        return NatMatrix(tuple(tuple(v % n for v in row) for row in self.entries))

    def shift(self, h: int) -> "NatMatrix":
        """h + A."""
        return NatMatrix(tuple(tuple(v + h for v in row) for row in self.entries))

    def hconcat(self, other: "NatMatrix") -> "NatMatrix":
        """A ∪ B: the columns of B appended after those of A."""
        if self.m != other.m:
            raise ArrangementError("row union needs matrices with the same number of rows")
        return NatMatrix(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vconcat(self, other: "NatMatrix") -> "NatMatrix":
        """Dual union: the rows of B appended below those of A."""
        if self.ell != other.ell:
            raise ArrangementError("column union needs matrices with the same number of columns")
        return NatMatrix(self.entries + other.entries)

    def max_entry(self) -> int:
        return max(max(row) for row in self.entries)

    def to_json(self) -> dict:
        return {"m": self.m, "l": self.ell, "entries": [list(row) for row in self.entries]}


@dataclass(frozen=True, order=True)
class BayonetWord:
    """The word a^left · sep · a^right for a separator sep in B(a*B)*."""
    left: int
    sep: str
    right: int
    letter: str = "a"

    @property
    def word(self) -> str:
        return self.letter * self.left + self.sep + self.letter * self.right

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.left, self.right)

    def __len__(self) -> int:
        return self.left + len(self.sep) + self.right

    @classmethod
    def from_word(cls, word: str, letter: str = "a") -> Optional["BayonetWord"]:
        """Split a word as a^i w a^j with w neither starting nor ending with the letter; None for words in a*."""
        core = word.strip(letter)
        if not core:
            return None
        left = len(word) - len(word.lstrip(letter))
        right = len(word) - len(word.rstrip(letter))
        return cls(left, core, right, letter)

    def to_json(self) -> dict:
        return {"i": self.left, "sep": self.sep, "j": self.right}

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class WordMatrix:
    """m × ℓ matrix of bayonet words sharing one separator."""
    entries: tuple[tuple[BayonetWord, ...], ...]

    def __post_init__(self) -> None:
        rows = _as_rows(self.entries)
        object.__setattr__(self, "entries", rows)
        separators = {w.sep for row in rows for w in row}
        if len(separators) != 1:
            raise ArrangementError(f"word matrix mixes separators {sorted(separators)}")

    @classmethod
    def of(cls, rows: Sequence[Sequence[BayonetWord]]) -> "WordMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_exponents(cls, rows: Sequence[Sequence[tuple[int, int]]], sep: str, letter: str = "a") -> "WordMatrix":
        return cls(tuple(tuple(BayonetWord(i, sep, j, letter) for i, j in row) for row in rows))

    @property
    def sep(self) -> str:
        return self.entries[0][0].sep

    @property
    def letter(self) -> str:
        return self.entries[0][0].letter

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def ell(self) -> int:
        return len(self.entries[0])

    def words(self) -> list[BayonetWord]:
        return [w for row in self.entries for w in row]

    def word_rows(self) -> list[frozenset[BayonetWord]]:
        return [frozenset(row) for row in self.entries]

    def word_columns(self) -> list[frozenset[BayonetWord]]:
        return [frozenset(row[q] for row in self.entries) for q in range(self.ell)]

    def left_matrix(self) -> NatMatrix:
        return NatMatrix(tuple(tuple(w.left for w in row) for row in self.entries))

    def right_matrix(self) -> NatMatrix:
        return NatMatrix(tuple(tuple(w.right for w in row) for row in self.entries))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "l": self.ell,
            "sep": self.sep,
            "entries": [[w.to_json() for w in row] for row in self.entries],
        }
