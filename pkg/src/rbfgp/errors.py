"""Exception hierarchy.

Errors split into two families so callers (and the CLI exit codes) can tell
caller mistakes apart from numerical pathology in the data.
"""


class GPError(Exception):
    """Base class for every error raised by rbfgp."""


class UsageError(GPError, ValueError):
    """The caller passed inputs that violate an operation's contract."""


class NumericalError(GPError, ArithmeticError):
    """The inputs are well formed but the numerics cannot proceed."""


class DimensionMismatch(UsageError):
    pass


class UnsupportedDimension(UsageError):
    pass


class NoiseOnCrossCovariance(UsageError):
    pass


class InvalidRange(UsageError):
    pass


class ParseError(UsageError):
    pass


class NotPositiveDefinite(NumericalError):
    pass


class SingularMatrix(NumericalError):
    pass


class NonpositiveVariance(NumericalError):
    pass


class ObjectiveNotFinite(NumericalError):
    pass


class InconsistentVariance(NumericalError):
    """A variance came out negative by more than round-off can explain."""
