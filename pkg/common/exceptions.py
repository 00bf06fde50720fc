"""Custom exception classes for factorcodes."""

from typing import Any, Optional


class FactorCodesError(Exception):
    """
    Base exception class for all factorcodes errors.
    """
    pass


class AlphabetMismatchError(FactorCodesError):
    """
    Raised when two polynomials declared over different alphabets are combined.
    """
    pass


class LetterNotInAlphabetError(FactorCodesError):
    """
    Raised when a letter or a word uses a symbol outside the declared alphabet.
    """
    pass


class PolynomialDivisionByZeroError(FactorCodesError, ZeroDivisionError):
    """
    Raised when dividing by the zero polynomial.
    """
    pass


class PolynomialParseError(FactorCodesError):
    """
    Raised when a polynomial rendering cannot be parsed.
    """
    pass


class InvalidModulusError(FactorCodesError):
    """
    Raised when a modulus is not a positive natural.
    """
    pass


class InvalidChainError(FactorCodesError):
    """
    Raised when a sequence is not a chain 1 = k_0 | k_1 | ... | k_s = n of distinct divisors.
    """
    pass


class ResourceLimitError(FactorCodesError):
    """
    Raised when an exhaustive computation would exceed a configured limit.
    """
    pass


class EnumerationBoundError(ResourceLimitError):
    """
    Raised when n is above the configured enumeration bound.
    """
    pass


class SearchBudgetExceededError(ResourceLimitError):
    """
    Raised when a search explores more candidates than its budget allows.
    """
    pass


class ContractViolationError(FactorCodesError):
    """
    Raised when the preconditions of a decomposition do not hold.
    """
    pass


class PreconditionError(FactorCodesError):
    """
    Raised when the input of an analysis does not satisfy its hypotheses.
    """
    pass


class ArrangementError(FactorCodesError):
    """
    Base class for failures while building an arrangement.
    """
    pass


class NotHajosFamilyError(ArrangementError):
    """
    Raised when a family is not jointly Hajós with the given companion and chain.
    """
    pass


class DecompositionError(ArrangementError):
    """
    Raised when a recursive decomposition step fails on a row.
    """

    def __init__(self, message: str, row: Optional[tuple[int, ...]] = None):
        super().__init__(message)
        self.row = row


class CoefficientError(FactorCodesError):
    """
    Base class for polynomials whose coefficients are not those of a language.
    """

    def __init__(self, message: str, word: str, coefficient: int):
        super().__init__(message)
        self.word = word
        self.coefficient = coefficient


class NotALanguageError(CoefficientError):
    """
    Raised when a polynomial expected to be a set has a negative coefficient.
    """
    pass


class MultiplicityError(CoefficientError):
    """
    Raised when a polynomial expected to be a set has a coefficient of 2 or more.
    """
    pass


class NotFactorizingError(CoefficientError):
    """
    Raised when P(A - 1)S + 1 is not the characteristic polynomial of a code.
    """
    pass


class NotACodeError(FactorCodesError):
    """
    Raised when an operation requires a code and the word set is not one.
    """
    pass


class NotMaximalError(FactorCodesError):
    """
    Raised when an operation requires a maximal code.
    """
    pass


class NoLetterOrderError(FactorCodesError):
    """
    Raised when no power of the distinguished letter belongs to the code.
    """
    pass


class InvalidSeparatorError(FactorCodesError):
    """
    Raised when a separator word does not belong to B(a*B)*.
    """
    pass


class BoundTooSmallError(FactorCodesError):
    """
    Raised when a bounded enumeration still touches its boundary after all retries.
    """
    pass


class CodeParseError(FactorCodesError):
    """
    Raised when a code file cannot be parsed.
    """
    pass


class TheoremViolationError(FactorCodesError):
    """
    Raised when a construction guaranteed by the theory cannot be completed.

    The bundle is a JSON-serialisable reproduction of the failing input.
    """

    def __init__(self, finding: str, bundle: Optional[dict[str, Any]] = None):
        super().__init__(finding)
        self.finding = finding
        self.bundle = bundle or {}
