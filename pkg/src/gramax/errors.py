"""Exception types shared across the package."""


class GramaxError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(GramaxError, ValueError):
    """An operand has an incompatible or invalid shape."""


class NumericOverflowError(GramaxError, ArithmeticError):
    """A computation produced non-finite values."""


class MetzlerViolationError(GramaxError, ValueError):
    """A matrix required to be Metzler has a negative off-diagonal entry."""

    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(
            "off-diagonal entry A[%d, %d] = %g is negative; Metzler mode requires "
            "nonnegative off-diagonal entries" % (index[0], index[1], value)
        )


class ConfigError(GramaxError, ValueError):
    """An invalid configuration value (budget, step factor, generator parameter)."""
