"""The E1 normal form of a good arrangement and the EC2 evaluation of C_1."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Optional

from algebra.exponent import ExponentPolynomial
from algebra.noncommutative import NoncommutativePolynomial
from arrangements.matrices import BayonetWord
from common.exceptions import ContractViolationError, MultiplicityError, NotALanguageError, PreconditionError
from common.logging_config import get_logger
from cyclic.krasner import is_krasner

logger = get_logger(__name__)


@dataclass(frozen=True)
class E1Parameters:
    """
    Parameters with C_1 mod n = Σ_k Σ_i a^{i + λ_{i,k} h} w a^{t_i + k h}.

    ``lambdas[i][k]`` is λ_{i,k}.
    """
    h: int
    g: int
    t: tuple[int, ...]
    lambdas: tuple[tuple[int, ...], ...]

    def words(self, sep: str = "b", letter: str = "a") -> frozenset[BayonetWord]:
        return frozenset(
            BayonetWord(i + self.lambdas[i][k] * self.h, sep, self.t[i] + k * self.h, letter)
            for i in range(self.h)
            for k in range(self.g)
        )

    def to_json(self) -> dict:
        return {"h": self.h, "g": self.g, "t": list(self.t), "lambda": [list(row) for row in self.lambdas]}


def eq_E1_form(c1: Iterable[BayonetWord], h: int, g: int) -> Optional[E1Parameters]:
    """
    Recover t_i and λ_{i,k} such that C_1 reduced modulo n = g·h has the E1 form.

    Returns:
        E1Parameters, or None when C_1 is not of that form
    """
    n = g * h
    words = list(c1)
    reduced = {(w.left % n, w.right % n) for w in words}
    if len(words) != n or len(reduced) != n:
        return None
    groups: dict[int, list[tuple[int, int]]] = {i: [] for i in range(h)}
    for left, right in reduced:
        groups[left % h].append((left, right))
    t_values: list[int] = []
    lambdas: list[tuple[int, ...]] = []
    for i in range(h):
        group = groups[i]
        if len(group) != g:
            return None
        shifts = {right % h for _, right in group}
        if len(shifts) != 1:
            return None
        t_i = shifts.pop()
        by_k: dict[int, int] = {}
        for left, right in group:
            k = (right - t_i) // h
            if k in by_k:
                return None
            by_k[k] = left // h
        if set(by_k) != set(range(g)):
            return None
        t_values.append(t_i)
        lambdas.append(tuple(by_k[k] for k in range(g)))
    return E1Parameters(h, g, tuple(t_values), tuple(lambdas))


def _exp(values: Iterable[int], letter: str, alphabet: str) -> NoncommutativePolynomial:
    return ExponentPolynomial.from_set(values).to_noncommutative(letter, alphabet)


def ec2_polynomial(
    i: Iterable[int],
    j: Iterable[int],
    i_prime: Iterable[int],
    j_prime: Iterable[int],
    l_sets: Mapping[int, Iterable[int]],
    m_sets: Mapping[int, Iterable[int]],
    sep: str = "b",
    letter: str = "a",
) -> NoncommutativePolynomial:
    """a^I w a^J + Σ_{i∈I'} a^i w a^{L_i}(a-1)a^J + Σ_{j∈J'} a^I(a-1)a^{M_j} w a^j."""
    alphabet = "".join(sorted(set(letter) | set(sep)))
    a_i = _exp(i, letter, alphabet)
    a_j = _exp(j, letter, alphabet)
    w = NoncommutativePolynomial.monomial(sep, alphabet)
    a_minus_one = NoncommutativePolynomial({letter: 1, "": -1}, alphabet)
    total = a_i * w * a_j
    for index in sorted(set(i_prime)):
        if index not in l_sets:
            raise ContractViolationError(f"L_{index} is missing")
        total = total + _exp([index], letter, alphabet) * w * _exp(l_sets[index], letter, alphabet) * a_minus_one * a_j
    for index in sorted(set(j_prime)):
        if index not in m_sets:
            raise ContractViolationError(f"M_{index} is missing")
        total = total + a_i * a_minus_one * _exp(m_sets[index], letter, alphabet) * w * _exp([index], letter, alphabet)
    return total


def eq_EC2_build(
    i: Iterable[int],
    j: Iterable[int],
    i_prime: Iterable[int],
    j_prime: Iterable[int],
    l_sets: Mapping[int, Iterable[int]],
    m_sets: Mapping[int, Iterable[int]],
    sep: str = "b",
    letter: str = "a",
) -> frozenset[BayonetWord]:
    """
    Evaluate C_1 for a Krasner pair (I, J) and the sets I', J', L_i, M_j.

    Raises:
        ContractViolationError: If (I, J) is not a Krasner pair
        PreconditionError: If I' is not a subset of I or J' is not a subset of J
        NotALanguageError: If a coefficient is negative
        MultiplicityError: If a coefficient is 2 or more
    """
    i_set, j_set = frozenset(i), frozenset(j)
    n = len(i_set) * len(j_set)
    if not is_krasner(i_set, j_set, n):
        raise ContractViolationError(f"({sorted(i_set)}, {sorted(j_set)}) is not a Krasner pair")
    i_prime, j_prime = frozenset(i_prime), frozenset(j_prime)
    if not i_prime <= i_set or not j_prime <= j_set:
        raise PreconditionError(
            f"I' = {sorted(i_prime)} and J' = {sorted(j_prime)} must lie in I = {sorted(i_set)} and J = {sorted(j_set)}"
        )
    polynomial = ec2_polynomial(i_set, j_set, i_prime, j_prime, l_sets, m_sets, sep, letter)
    for word, coefficient in polynomial.terms():
        if coefficient < 0:
            raise NotALanguageError(f"C_1 has coefficient {coefficient} at {word}", word=word, coefficient=coefficient)
        if coefficient > 1:
            raise MultiplicityError(f"C_1 has coefficient {coefficient} at {word}", word=word, coefficient=coefficient)
    words = frozenset(BayonetWord.from_word(word, letter) for word in polynomial.support())
    logger.debug(f"C_1 built with {len(words)} words")
    return words
