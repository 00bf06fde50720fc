"""Integer-coefficient polynomials over a finite alphabet in noncommuting letters."""

import re
from collections.abc import Iterable, Mapping
from typing import Optional, Union

from common.exceptions import (
    AlphabetMismatchError,
    LetterNotInAlphabetError,
    PolynomialDivisionByZeroError,
    PolynomialParseError,
)
from common.types import Word, word_key

MINUS = "−"
DOT = "·"

_TERM_RE = re.compile(r"^(?:(\d+)\s*[·*]\s*)?(\S+)$")


def _normalize_alphabet(alphabet: Iterable[str]) -> str:
    letters = "".join(sorted(set(alphabet)))
    if not letters:
        raise LetterNotInAlphabetError("alphabet must contain at least one letter")
    return letters


class NoncommutativePolynomial:
    """
    Element of Z<A>: a finite formal sum of words with signed integer coefficients.

    Instances are immutable and always keep a canonical support (no zero
    coefficient is stored). Arithmetic is only defined between polynomials
    declared over the same alphabet.
    """

    __slots__ = ("_alphabet", "_coefficients", "_hash")

    def __init__(self, coefficients: Mapping[Word, int], alphabet: Iterable[str]):
        self._alphabet = _normalize_alphabet(alphabet)
        letters = set(self._alphabet)
        cleaned: dict[Word, int] = {}
        for word, coefficient in coefficients.items():
            if not isinstance(coefficient, int):
                raise TypeError(f"coefficient of {word!r} must be an integer, got {coefficient!r}")
            if coefficient == 0:
                continue
            stray = set(word) - letters
            if stray:
                raise LetterNotInAlphabetError(
                    f"word {word!r} uses letters {''.join(sorted(stray))} outside alphabet {self._alphabet}"
                )
            cleaned[word] = coefficient
        self._coefficients = cleaned
        self._hash: Optional[int] = None

    # construction

    @classmethod
    def zero(cls, alphabet: Iterable[str]) -> "NoncommutativePolynomial":
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet: Iterable[str]) -> "NoncommutativePolynomial":
        return cls({"": 1}, alphabet)

    @classmethod
    def monomial(cls, word: Word, alphabet: Iterable[str], coefficient: int = 1) -> "NoncommutativePolynomial":
        return cls({word: coefficient}, alphabet)

    @classmethod
    def from_words(cls, words: Iterable[Word], alphabet: Iterable[str]) -> "NoncommutativePolynomial":
        """Characteristic polynomial of a finite language (duplicates are counted once)."""
        return cls({w: 1 for w in set(words)}, alphabet)

    @classmethod
    def letter_sum(cls, alphabet: Iterable[str]) -> "NoncommutativePolynomial":
        """The polynomial A, sum of all letters."""
        letters = _normalize_alphabet(alphabet)
        return cls({letter: 1 for letter in letters}, letters)

    # inspection

    @property
    def alphabet(self) -> str:
        return self._alphabet

    def coefficient(self, word: Word) -> int:
        return self._coefficients.get(word, 0)

    def support(self) -> frozenset[Word]:
        return frozenset(self._coefficients)

    def terms(self) -> list[tuple[Word, int]]:
        """Terms in canonical length-then-lexicographic order."""
        return [(w, self._coefficients[w]) for w in sorted(self._coefficients, key=word_key)]

    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def constant_term(self) -> int:
        return self._coefficients.get("", 0)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coefficients.values())

    def is_characteristic(self) -> bool:
        """True iff every coefficient is 1, i.e. the polynomial is the characteristic polynomial of its support."""
        return all(c == 1 for c in self._coefficients.values())

    def leading_term(self) -> tuple[Word, int]:
        if not self._coefficients:
            raise ValueError("the zero polynomial has no leading term")
        word = max(self._coefficients, key=word_key)
        return word, self._coefficients[word]

    def letter_degrees(self, letter: str) -> list[int]:
        """Distinct values of |w|_letter over the support, ascending."""
        self._require_letter(letter)
        return sorted({w.count(letter) for w in self._coefficients})

    # arithmetic

    def _check_alphabet(self, other: "NoncommutativePolynomial") -> None:
        if self._alphabet != other._alphabet:
            raise AlphabetMismatchError(
                f"cannot combine polynomials over {self._alphabet!r} and {other._alphabet!r}"
            )

    def _require_letter(self, letter: str) -> None:
        if len(letter) != 1 or letter not in self._alphabet:
            raise LetterNotInAlphabetError(f"{letter!r} is not a letter of alphabet {self._alphabet!r}")

    def __add__(self, other: "NoncommutativePolynomial") -> "NoncommutativePolynomial":
        if not isinstance(other, NoncommutativePolynomial):
            return NotImplemented
        self._check_alphabet(other)
        result = dict(self._coefficients)
        for word, coefficient in other._coefficients.items():
            result[word] = result.get(word, 0) + coefficient
        return NoncommutativePolynomial(result, self._alphabet)

    def __neg__(self) -> "NoncommutativePolynomial":
        return NoncommutativePolynomial({w: -c for w, c in self._coefficients.items()}, self._alphabet)

    def __sub__(self, other: "NoncommutativePolynomial") -> "NoncommutativePolynomial":
        if not isinstance(other, NoncommutativePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["NoncommutativePolynomial", int]) -> "NoncommutativePolynomial":
        if isinstance(other, int):
            return NoncommutativePolynomial(
                {w: c * other for w, c in self._coefficients.items()}, self._alphabet
            )
        if not isinstance(other, NoncommutativePolynomial):
            return NotImplemented
        self._check_alphabet(other)
        result: dict[Word, int] = {}
        for u, cu in self._coefficients.items():
            for v, cv in other._coefficients.items():
                w = u + v
                result[w] = result.get(w, 0) + cu * cv
        return NoncommutativePolynomial(result, self._alphabet)

    def __rmul__(self, other: int) -> "NoncommutativePolynomial":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NoncommutativePolynomial):
            return NotImplemented
        return self._alphabet == other._alphabet and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._alphabet, frozenset(self._coefficients.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NoncommutativePolynomial({self.render()!r}, alphabet={self._alphabet!r})"

    def __str__(self) -> str:
        return self.render()

    # degree restriction

    def restrict_degree(self, letter: str, degree: int) -> "NoncommutativePolynomial":
        """
        Keep exactly the terms whose word has ``degree`` occurrences of ``letter``.

        Raises:
            LetterNotInAlphabetError: If letter is not in the alphabet
        """
        self._require_letter(letter)
        return NoncommutativePolynomial(
            {w: c for w, c in self._coefficients.items() if w.count(letter) == degree},
            self._alphabet,
        )

    # exact division

    def right_divide(self, divisor: "NoncommutativePolynomial") -> Optional["NoncommutativePolynomial"]:
        """
        Return Q with Q * divisor == self, or None when no such Q exists in Z<A>.

        Length-then-lexicographic order is compatible with concatenation, so the
        leading word of a product is the product of leading words and long
        division on leading words is exact.
        """
        return self._divide(divisor, right=True)

    def left_divide(self, divisor: "NoncommutativePolynomial") -> Optional["NoncommutativePolynomial"]:
        """Return Q with divisor * Q == self, or None."""
        return self._divide(divisor, right=False)

    def _divide(self, divisor: "NoncommutativePolynomial", right: bool) -> Optional["NoncommutativePolynomial"]:
        self._check_alphabet(divisor)
        if divisor.is_zero():
            raise PolynomialDivisionByZeroError("division by the zero polynomial")
        lead_d, coef_d = divisor.leading_term()
        remainder = self
        quotient: dict[Word, int] = {}
        while not remainder.is_zero():
            lead_r, coef_r = remainder.leading_term()
            if len(lead_r) < len(lead_d) or coef_r % coef_d:
                return None
            if right:
                if not lead_r.endswith(lead_d):
                    return None
                q_word = lead_r[: len(lead_r) - len(lead_d)]
            else:
                if not lead_r.startswith(lead_d):
                    return None
                q_word = lead_r[len(lead_d):]
            q_coef = coef_r // coef_d
            quotient[q_word] = quotient.get(q_word, 0) + q_coef
            step = NoncommutativePolynomial.monomial(q_word, self._alphabet, q_coef)
            remainder = remainder - (step * divisor if right else divisor * step)
        return NoncommutativePolynomial(quotient, self._alphabet)

    # text form

    def render(self) -> str:
        """
        Render as text: canonical term order, terms joined by " + " / " − ",
        coefficients as ``k·w`` and the empty word as ``1``.
        """
        if not self._coefficients:
            return "0"
        pieces: list[str] = []
        for index, (word, coefficient) in enumerate(self.terms()):
            magnitude = abs(coefficient)
            if word == "":
                body = str(magnitude)
            elif magnitude == 1:
                body = word
            else:
                body = f"{magnitude}{DOT}{word}"
            if index == 0:
                pieces.append(f"{MINUS} {body}" if coefficient < 0 else body)
            else:
                pieces.append(f" {MINUS} {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    @classmethod
    def parse(cls, text: str, alphabet: Iterable[str]) -> "NoncommutativePolynomial":
        """
        Parse the rendering grammar; ASCII ``-`` and ``*`` are accepted too.

        Raises:
            PolynomialParseError: If the text is not a polynomial over the alphabet
        """
        letters = _normalize_alphabet(alphabet)
        normalized = text.replace(MINUS, "-").strip()
        if not normalized:
            raise PolynomialParseError("empty polynomial text")
        if normalized == "0":
            return cls.zero(letters)

        tokens = re.split(r"([+-])", normalized)
        coefficients: dict[Word, int] = {}
        sign = 1
        signed = False
        expect_term = True
        for raw in tokens:
            token = raw.strip()
            if not token:
                continue
            if token in ("+", "-"):
                if signed:
                    raise PolynomialParseError(f"repeated sign in {text!r}")
                sign = 1 if token == "+" else -1
                signed = True
                expect_term = True
                continue
            if not expect_term:
                raise PolynomialParseError(f"missing operator before {token!r} in {text!r}")
            coefficient, word = cls._parse_term(token, text)
            if set(word) - set(letters):
                raise PolynomialParseError(f"term {token!r} uses letters outside alphabet {letters!r}")
            coefficients[word] = coefficients.get(word, 0) + sign * coefficient
            sign = 1
            signed = False
            expect_term = False
        if expect_term:
            raise PolynomialParseError(f"dangling operator in {text!r}")
        return cls(coefficients, letters)

    @staticmethod
    def _parse_term(token: str, text: str) -> tuple[int, Word]:
        if token.isdigit():
            return int(token), ""
        match = _TERM_RE.match(token)
        if not match:
            raise PolynomialParseError(f"cannot parse term {token!r} in {text!r}")
        count, word = match.groups()
        if any(ch.isdigit() for ch in word):
            raise PolynomialParseError(f"cannot parse term {token!r} in {text!r}")
        return (int(count) if count else 1), word

    def to_json(self) -> dict:
        return {"alphabet": self._alphabet, "terms": [[w, c] for w, c in self.terms()]}
