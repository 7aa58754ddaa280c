"""Errors raised by the rainbow scanners."""


class VerificationError(ValueError):
    """Base class for every verification error."""


class QTooSmall(VerificationError):
    pass


class QTooLarge(VerificationError):
    pass


class PatternInvalid(VerificationError):
    pass


class PatternTooLarge(VerificationError):
    pass


class ColorLimitExceeded(VerificationError):
    """Colors do not fit the 64-bit color masks used by the scanners."""


class InvalidSampleCount(VerificationError):
    pass


class WitnessError(VerificationError):
    """A witness produced by a scanner failed re-validation."""
