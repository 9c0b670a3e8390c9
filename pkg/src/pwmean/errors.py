"""Exception hierarchy shared by every module of the package."""


class PwmeanError(Exception):
    """Base class for all errors raised by :mod:`pwmean`."""


class SymmetryError(PwmeanError, ValueError):
    """Input matrix is not symmetric within tolerance."""


class NotPositiveDefiniteError(PwmeanError, ValueError):
    """Input matrix is not (numerically) positive definite."""


class SingularTransformError(PwmeanError, ValueError):
    """A congruence or similar transform was given a singular matrix."""


class DimensionError(PwmeanError, ValueError):
    """Shapes or tuple lengths do not agree."""


class DomainError(PwmeanError, ValueError):
    """A scalar parameter lies outside its admissible range."""


class NumericError(PwmeanError, ArithmeticError):
    """A numerical routine failed (non-convergence, overflow, ...)."""
