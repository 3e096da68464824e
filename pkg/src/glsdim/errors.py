"""Exception types raised across the package."""


class SuperdimError(Exception):
    """Base class for all package errors."""


class NotDominant(SuperdimError, ValueError):
    pass


class UnsupportedShape(SuperdimError, ValueError):
    """Raised for gl(m|n) with m < n."""


class DimensionMismatch(SuperdimError, ValueError):
    pass


class NotInCoset(SuperdimError, ValueError):
    """Weight difference is not an integer combination of the atypical roots."""


class BoundExceeded(SuperdimError, ValueError):
    pass


class HookViolation(SuperdimError, ValueError):
    pass


class ShellNotClean(SuperdimError, ArithmeticError):
    """Truncated character has nonzero coefficients in its bottom levels.

    The cutoff did not reach below the support of the character; retry with a
    larger cutoff.
    """

    def __init__(self, message, cutoff=None):
        super().__init__(message)
        self.cutoff = cutoff
