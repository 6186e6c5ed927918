"""Exception types shared across the package."""

from __future__ import annotations


class CongruenceForgeError(Exception):
    """Base class for all errors raised by this package."""


class OffsetMismatch(CongruenceForgeError, ValueError):
    """Two series have fractional exponent offsets that cannot be aligned."""


class NonUnitLeadingCoefficient(CongruenceForgeError, ValueError):
    pass


class BadCharacteristic(CongruenceForgeError, ValueError):
    pass


class FractionalExponent(CongruenceForgeError, ValueError):
    pass


class DenominatorDivisibleByEll(CongruenceForgeError, ValueError):
    pass


class InsufficientPrecision(CongruenceForgeError, ValueError):
    """Raised when a computation needs more coefficients than supplied.

    ``needed`` is the number of coefficients (from exponent 0) that would
    have been sufficient.
    """

    def __init__(self, message: str, needed: int | None = None):
        super().__init__(message)
        self.needed = needed


class ThetaKillsForm(CongruenceForgeError, ValueError):
    pass


class FactoringBudgetExceeded(CongruenceForgeError, RuntimeError):
    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class AllDifferencesZero(CongruenceForgeError, RuntimeError):
    pass


class ExprSyntaxError(CongruenceForgeError, ValueError):
    """Parse failure carrying the offending position and expected tokens."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        super().__init__(f"{message} at position {position}"
                         + (f" (expected one of: {', '.join(expected)})" if expected else ""))
        self.position = position
        self.expected = expected
