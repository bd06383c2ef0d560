"""Exception types raised by the package"""


class CircleUncertaintyError(Exception):
    """Base class for all package errors."""
    pass


class NumericDomainError(CircleUncertaintyError, ValueError):
    """Raised when a computation is asked for outside its numeric domain."""
    pass


class BesselDomainError(NumericDomainError):
    """Raised for Bessel arguments or orders outside the supported range."""
    pass


class RangeGuardError(NumericDomainError):
    """Raised when a parameter exceeds a documented range guard."""
    pass


class GridSizeError(NumericDomainError):
    """Raised when an angular grid is too small or not a power of two."""
    pass


class TailToleranceError(NumericDomainError):
    """Raised when no window up to the maximum reaches the tail tolerance."""
    pass


class SingularCovarianceError(NumericDomainError):
    """Raised when the covariance matrix cannot be inverted."""
    pass


class DegenerateCovarianceError(NumericDomainError):
    """Raised when a variance or trace vanishes where a quotient needs it."""
    pass


class NormalizationError(NumericDomainError):
    """Raised when a state is not normalised."""
    pass


class StateInputError(CircleUncertaintyError, ValueError):
    """Raised when a state file or builtin spec cannot be used."""
    pass


class ChainViolationError(CircleUncertaintyError):
    """Raised when the ordering chain of bounds is violated."""
    pass


class ArgumentError(CircleUncertaintyError, ValueError):
    """Raised when a command-line value is missing or out of range."""
    pass
