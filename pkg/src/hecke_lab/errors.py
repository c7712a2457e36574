"""Exception taxonomy shared across the package.

Numeric routines raise rather than return NaN/Inf: any non-finite value
escaping a public operation is a bug, not a signal.
"""


class HeckeLabError(Exception):
    """Base class for all package errors."""


class DomainError(HeckeLabError, ValueError):
    """Argument outside the documented domain of an operation."""


class PoleOfGamma(DomainError):
    """Gamma evaluated at a non-positive integer."""


class PoleHit(DomainError):
    """Evaluation point coincides with a pole of the target function."""

    def __init__(self, message, pole=None):
        super().__init__(message)
        self.pole = pole


class ConvergenceError(HeckeLabError, ArithmeticError):
    """A quadrature or series failed to stabilise within its budget."""


class ConvergenceWarning(UserWarning):
    """Tail control is weaker than requested; result is uncertified."""


class InsufficientTaylor(HeckeLabError, ValueError):
    """Kernel Taylor data shorter than the pole order it must pair with."""


class UnknownForm(HeckeLabError, KeyError):
    """Catalog lookup for a name that is not shipped."""


class ParseError(HeckeLabError, ValueError):
    """Malformed form config or CLI literal."""


class ValidationError(HeckeLabError, ValueError):
    """Config parsed but violates a descriptor invariant."""


class IoError(HeckeLabError, OSError):
    """Coefficient file missing or unreadable."""


class ResourceLimit(HeckeLabError, RuntimeError):
    """Request exceeds a configured cap (coefficient horizon, etc.)."""


class AmbiguityUnresolved(HeckeLabError, RuntimeError):
    """Calibration found zero or several passing bookkeeping variants."""
