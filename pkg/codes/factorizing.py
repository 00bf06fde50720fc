"""Factorizing codes: C - 1 = P(A - 1)S, construction, verification and positive search."""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from algebra.noncommutative import NoncommutativePolynomial
from codes.models import FiniteCode
from codes.predicates import is_code, is_maximal, letter_order
from common.constants import DEFAULT_FACTORIZATION_BUDGET
from common.exceptions import (
    AlphabetMismatchError,
    NotFactorizingError,
    NotMaximalError,
    SearchBudgetExceededError,
)
from common.logging_config import get_logger
from common.types import Word, sorted_words
from cyclic.krasner import krasner_pairs

logger = get_logger(__name__)


@dataclass(frozen=True)
class FactorizationVerdict:
    """
    Result of checking C = P(A - 1)S + 1.

    ``findings`` lists consequences of the factorization theorem that failed
    to hold while the identity itself did; an empty list is the normal case.
    """
    holds: bool
    findings: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "findings": list(self.findings)}


@dataclass(frozen=True)
class PositiveFactorization:
    """A positive factorization (P, S) of a code, both sides given as word sets."""
    p: frozenset[Word]
    s: frozenset[Word]
    candidates_tried: int = 0

    def to_json(self) -> dict:
        return {"P": sorted_words(self.p), "S": sorted_words(self.s)}


@dataclass(frozen=True)
class FactorizingCode:
    """A code together with the word sets it was built from."""
    code: FiniteCode
    p: frozenset[Word]
    s: frozenset[Word]

    def to_json(self) -> dict:
        return {"code": self.code.to_json(), "P": sorted_words(self.p), "S": sorted_words(self.s)}


def _letters_minus_one(alphabet: str) -> NoncommutativePolynomial:
    return NoncommutativePolynomial.letter_sum(alphabet) - NoncommutativePolynomial.one(alphabet)


def factorization_polynomial(
    p: NoncommutativePolynomial,
    s: NoncommutativePolynomial,
) -> NoncommutativePolynomial:
    """P(A - 1)S + 1 over the common alphabet of P and S."""
    alphabet = p.alphabet
    return p * _letters_minus_one(alphabet) * s + NoncommutativePolynomial.one(alphabet)


def verify_factorization_PS(
    p: NoncommutativePolynomial,
    s: NoncommutativePolynomial,
    code: FiniteCode,
) -> FactorizationVerdict:
    """
    Check that the characteristic polynomial of C equals P(A - 1)S + 1.

    When the identity holds and P, S have nonnegative coefficients, P and S
    must be sets and C must be a maximal code; a failure of either claim is
    returned as a finding.

    Raises:
        AlphabetMismatchError: If P, S and C are not over the same alphabet
    """
    for side in (p, s):
        if side.alphabet != code.alphabet:
            raise AlphabetMismatchError(f"polynomial over {side.alphabet!r} checked against a code over {code.alphabet!r}")
    expected = code.polynomial()
    if factorization_polynomial(p, s) != expected:
        return FactorizationVerdict(False)

    findings: list[str] = []
    if p.is_nonnegative() and s.is_nonnegative():
        for name, side in (("P", p), ("S", s)):
            if not side.is_characteristic():
                findings.append(f"{name} = {side.render()} has nonnegative coefficients but is not a set")
        check = is_code(code)
        if not check:
            findings.append(f"{code.canonical()} is not a code: {check.witness!r} is ambiguous")
        elif not is_maximal(code):
            findings.append(f"{code.canonical()} is a code but not maximal")
    for finding in findings:
        logger.error(f"Factorization consequence failed: {finding}")
    return FactorizationVerdict(True, tuple(findings))


def build_code_from_PS(p: Iterable[Word], s: Iterable[Word], alphabet: Iterable[str]) -> FactorizingCode:
    """
    Compute P(A - 1)S + 1 for word sets P, S and return its support as a code.

    Raises:
        NotFactorizingError: If some coefficient is not 0 or 1, or the constant term survives
    """
    p_set, s_set = frozenset(p), frozenset(s)
    letters = "".join(sorted(set(alphabet)))
    result = factorization_polynomial(
        NoncommutativePolynomial.from_words(p_set, letters),
        NoncommutativePolynomial.from_words(s_set, letters),
    )
    for word, coefficient in result.terms():
        if word == "":
            raise NotFactorizingError(
                f"constant term {coefficient} survives: 1 must belong to both P and S",
                word=word,
                coefficient=coefficient,
            )
        if coefficient != 1:
            raise NotFactorizingError(
                f"coefficient {coefficient} at {word!r} in P(A - 1)S + 1",
                word=word,
                coefficient=coefficient,
            )
    code = FiniteCode(result.support(), letters)
    logger.debug(f"Built {code.canonical()} from P={sorted_words(p_set)}, S={sorted_words(s_set)}")
    return FactorizingCode(code, p_set, s_set)


def factor_universe(code: FiniteCode) -> list[Word]:
    """All factors of words of C shorter than the longest word, empty word included."""
    limit = code.max_length
    factors = {""}
    for word in code.words:
        for start in range(len(word)):
            for end in range(start + 1, len(word) + 1):
                if end - start < limit:
                    factors.add(word[start:end])
    return sorted_words(factors)


def _pure_options(code: FiniteCode) -> list[list[frozenset[Word]]]:
    """For every letter c of order n_c, the sets c^J over the Krasner coordinates J of order n_c."""
    options = []
    for letter in code.alphabet:
        n = letter_order(code, letter)
        if n is None:
            raise NotMaximalError(f"letter {letter!r} has no power in {code.canonical()}")
        coordinates = {pair.right for pair in krasner_pairs(n)}
        options.append(sorted(
            (frozenset(letter * j for j in coordinate) for coordinate in coordinates),
            key=lambda words: (len(words), sorted_words(words)),
        ))
    return options


def _s_candidates(code: FiniteCode) -> Iterator[frozenset[Word]]:
    """
    Candidate S sets by increasing size.

    The single-letter part of S is the exponent set of a Krasner coordinate
    for each letter; the remaining words are drawn from the factors that use
    two letters or more.
    """
    pure_parts = sorted(
        {frozenset().union(*choice) for choice in product(*_pure_options(code))},
        key=lambda words: (len(words), sorted_words(words)),
    )
    mixed = [w for w in factor_universe(code) if len(set(w)) > 1]
    largest = max(len(part) for part in pure_parts) + len(mixed)
    for size in range(1, largest + 1):
        for pure in pure_parts:
            extra = size - len(pure)
            if extra < 0 or extra > len(mixed):
                continue
            for combo in combinations(mixed, extra):
                yield pure | frozenset(combo)


def search_positive_factorization(
    code: FiniteCode,
    budget: int = DEFAULT_FACTORIZATION_BUDGET,
) -> Optional[PositiveFactorization]:
    """
    Search word sets P, S with C - 1 = P(A - 1)S.

    S candidates come smallest first; P is obtained by exact right division of
    C - 1 by (A - 1)S and accepted when it is a set containing 1. Only the
    nonnegative representative of the pair (P, S) ~ (-P, -S) is reported.

    Raises:
        NotMaximalError: If C is not a maximal code
        SearchBudgetExceededError: If more than ``budget`` S candidates are tried
    """
    if not is_code(code) or not is_maximal(code):
        raise NotMaximalError(f"{code.canonical()} is not a maximal code")
    alphabet = code.alphabet
    target = code.polynomial() - NoncommutativePolynomial.one(alphabet)
    a_minus_one = _letters_minus_one(alphabet)

    tried = 0
    for s_words in _s_candidates(code):
        tried += 1
        if tried > budget:
            raise SearchBudgetExceededError(f"positive factorization search exceeded {budget} candidates")
        divisor = a_minus_one * NoncommutativePolynomial.from_words(s_words, alphabet)
        quotient = target.right_divide(divisor)
        if quotient is None or not quotient.is_characteristic() or quotient.coefficient("") != 1:
            continue
        logger.info(f"Positive factorization of {code.canonical()} found after {tried} candidates")
        return PositiveFactorization(quotient.support(), s_words, tried)
    logger.info(f"No positive factorization of {code.canonical()} after {tried} candidates")
    return None


def code_from_ec2(
    i: Iterable[int],
    j: Iterable[int],
    l_sets: Mapping[int, Iterable[int]],
    m_sets: Mapping[int, Iterable[int]],
    sep: str = "b",
    letter: str = "a",
) -> FactorizingCode:
    """
    Build C from P = a^I + Σ_i a^i w a^{L_i} and S = a^J + Σ_j a^{M_j} w a^j.

    Raises:
        NotFactorizingError: If the resulting polynomial is not a code
    """
    p_words = {letter * x for x in i}
    p_words |= {letter * x + sep + letter * y for x, ys in l_sets.items() for y in ys}
    s_words = {letter * x for x in j}
    s_words |= {letter * x + sep + letter * y for y, xs in m_sets.items() for x in xs}
    return build_code_from_PS(p_words, s_words, set(letter) | set(sep))
