"""Exception hierarchy shared across the package.

Every error raised on purpose by this package derives from :class:`BconvlabError`,
so callers (and the CLI) can distinguish "our" failures from genuine bugs.
"""

from __future__ import annotations


class BconvlabError(Exception):
    """Base class for all package-specific errors."""


class ParseError(BconvlabError, ValueError):
    """Polynomial text that cannot be parsed."""


class ZeroPolynomialError(ParseError):
    """Input parsed to the zero polynomial, which has no root data at all."""


class DegreeZeroError(ParseError):
    """Input parsed to a nonzero constant; there are no roots to work with."""


class DegreeCapExceeded(BconvlabError):
    """A factorisation search would need degrees above the configured cap."""

    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"degree {degree} exceeds the configured cap {cap}")


class PrecisionExhausted(BconvlabError):
    """Certified arithmetic could not decide a predicate within the precision budget.

    Carries the number of bits that were tried last, for diagnostics.
    """

    def __init__(self, message: str, bits: int = 0):
        self.bits = bits
        super().__init__(message if not bits else f"{message} (last tried {bits} bits)")


class NoRealRootAboveOne(BconvlabError):
    """The polynomial has no real root strictly greater than 1."""


class ReductionDidNotTerminate(BconvlabError):
    """Square-root extraction kept producing even-exponent polynomials."""


class BudgetExceeded(BconvlabError):
    """An enumeration or subdivision would exceed the configured work budget."""

    def __init__(self, needed: int, budget: int, what: str = "items"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"would need {needed} {what}, budget is {budget}")


class NotMonicError(BconvlabError):
    """Operation requires an algebraic integer (monic minimal polynomial)."""


class NotSalemError(BconvlabError):
    """Operation is only defined for Salem numbers."""
