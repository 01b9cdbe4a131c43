"""Exception types shared across the package."""


class WVAError(Exception):
    """Base class for all package errors."""

    code = "error"


class InvalidParameterError(WVAError, ValueError):
    code = "validation"


class InvalidOverlapError(InvalidParameterError):
    """Mode overlap with modulus above one."""


class DegenerateConfigurationError(WVAError, ArithmeticError):
    """Quantity undefined for this configuration, typically an exactly dark port."""

    code = "degenerate"


class GridResolutionError(WVAError, ValueError):
    code = "grid"


class NoSolutionError(WVAError, ValueError):
    """No post-selection angle reaches the requested transmission.

    ``interval`` holds the achievable ``(t_min, t_max)`` transmission range.
    """

    code = "no-solution"

    def __init__(self, message, interval):
        super().__init__(message)
        self.interval = interval
