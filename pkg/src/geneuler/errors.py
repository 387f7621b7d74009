"""Exception types shared across the package."""


class GenEulerError(Exception):
    """Base class for all package errors."""


class DomainError(GenEulerError, ValueError):
    """Input outside the accepted domain (non-finite, wrong shape, ...)."""


class NumericError(GenEulerError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy target."""


class RangeError(NumericError, OverflowError):
    """Result would overflow double precision or exceed a supported window."""


class AccuracyWarning(UserWarning):
    """A result was produced outside its full-accuracy regime."""


class TruncationWarning(AccuracyWarning):
    """A truncated series did not meet its tail bound."""
