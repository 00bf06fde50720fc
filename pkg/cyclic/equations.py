"""Decomposition of the equation a^R = a^I(1 + a^M(a - 1)) along residues modulo n."""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from algebra.exponent import ExponentPolynomial
from algebra.univariate import a_minus_one, integer_poly
from common.exceptions import ContractViolationError, TheoremViolationError
from common.logging_config import get_logger
from cyclic.hajos import solve_eq_EF
from cyclic.krasner import is_krasner

logger = get_logger(__name__)


@dataclass(frozen=True)
class LemmaDecomposition:
    """
    M = M' ⊔ M'' with a^{R'} = a^I(1 + a^{M'}(a - 1)), a^{M''} = a^J·a^H and
    a^R = a^{R'} + a^I(a - 1)a^{M''}, where R' is R reduced modulo n.

    ``containment_checked`` is False when M' is empty, since I + max M' + 1 is
    then undefined.
    """
    m_prime: frozenset[int]
    m_second: frozenset[int]
    h: tuple[int, ...]
    r_prime: frozenset[int]
    lambdas: tuple[tuple[int, int], ...]
    containment_checked: bool

    def to_json(self) -> dict:
        return {
            "m_prime": sorted(self.m_prime),
            "m_second": sorted(self.m_second),
            "h": list(self.h),
            "r_prime": sorted(self.r_prime),
            "lambdas": [list(item) for item in self.lambdas],
            "containment_checked": self.containment_checked,
        }


def _ef_rhs(i: frozenset[int], m: Iterable[int]):
    i_poly = ExponentPolynomial.from_set(i).to_sympy()
    m_poly = ExponentPolynomial.from_multiset(m).to_sympy()
    return i_poly * (integer_poly({0: 1}) + m_poly * a_minus_one())


def lemma_L72_decompose(
    i: Iterable[int],
    j: Iterable[int],
    r: Iterable[int],
    m: Iterable[int],
    n: int,
) -> LemmaDecomposition:
    """
    Split M for a lifted R into its residue part M' and its lift part M''.

    Args:
        i, j: Krasner pair of order n
        r: R with a^R = a^I(1 + a^M(a - 1))
        m: M
        n: Modulus

    Returns:
        LemmaDecomposition with every identity re-verified

    Raises:
        ContractViolationError: If (I, J) is not Krasner, the equation does not
            hold or R does not reduce injectively modulo n
        TheoremViolationError: If a conclusion fails to verify
    """
    i_set, j_set, r_set, m_set = frozenset(i), frozenset(j), frozenset(r), frozenset(m)
    bundle = {"I": sorted(i_set), "J": sorted(j_set), "R": sorted(r_set), "M": sorted(m_set), "n": n}
    if not is_krasner(i_set, j_set, n):
        raise ContractViolationError(f"({sorted(i_set)}, {sorted(j_set)}) is not a Krasner pair of order {n}")
    r_poly = ExponentPolynomial.from_set(r_set).to_sympy()
    if r_poly != _ef_rhs(i_set, m_set):
        raise ContractViolationError(f"a^R != a^I(1 + a^M(a - 1)) for {bundle}")

    by_residue: dict[int, int] = {}
    for value in r_set:
        if value % n in by_residue:
            raise ContractViolationError(f"R has two elements congruent to {value % n} modulo {n}")
        by_residue[value % n] = value
    r_prime = frozenset(by_residue)
    lambdas = tuple(sorted((res, (value - res) // n) for res, value in by_residue.items()))

    h_multiset: Counter[int] = Counter()
    for res, lam in lambdas:
        for k in range(lam):
            h_multiset[res + k * n] += 1
    h_values = tuple(sorted(h_multiset.elements()))

    m_prime = solve_eq_EF(r_prime, i_set)
    if m_prime is None:
        raise TheoremViolationError("no M' solves the reduced equation", bundle)
    m_second_poly = ExponentPolynomial.from_set(j_set) * ExponentPolynomial.from_multiset(h_values)
    if not m_second_poly.is_characteristic():
        raise TheoremViolationError("a^J·a^H is not the polynomial of a set", bundle)
    m_second = m_second_poly.to_set()

    if m_prime & m_second or (m_prime | m_second) != m_set:
        raise TheoremViolationError(f"M' = {sorted(m_prime)} and M'' = {sorted(m_second)} do not split M", bundle)
    i_poly = ExponentPolynomial.from_set(i_set).to_sympy()
    r_prime_poly = ExponentPolynomial.from_set(r_prime).to_sympy()
    if r_prime_poly != _ef_rhs(i_set, m_prime):
        raise TheoremViolationError("a^{R'} != a^I(1 + a^{M'}(a - 1))", bundle)
    if r_poly != r_prime_poly + i_poly * a_minus_one() * m_second_poly.to_sympy():
        raise TheoremViolationError("a^R != a^{R'} + a^I(a - 1)a^{M''}", bundle)

    containment_checked = bool(m_prime)
    if containment_checked:
        top = max(m_prime) + 1
        if any(not 0 <= x + top <= n - 1 for x in i_set):
            raise TheoremViolationError("I + max M' + 1 is not contained in {0, ..., n - 1}", bundle)
    else:
        logger.debug(f"M' is empty, containment check skipped for {bundle}")

    return LemmaDecomposition(m_prime, m_second, h_values, r_prime, lambdas, containment_checked)
