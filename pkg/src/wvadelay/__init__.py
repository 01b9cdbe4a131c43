"""Weak-value-amplification delay interferometer: states, overlaps and bounds."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateConfigurationError,
    GridResolutionError,
    InvalidOverlapError,
    InvalidParameterError,
    NoSolutionError,
    WVAError,
)
from .pulse import C_ROUNDED, C_SI, PulseParams, make_pulse  # noqa: E402
from .scheme import Port, SchemeConfig  # noqa: E402

__all__ = [
    "C_ROUNDED",
    "C_SI",
    "DegenerateConfigurationError",
    "GridResolutionError",
    "InvalidOverlapError",
    "InvalidParameterError",
    "NoSolutionError",
    "Port",
    "PulseParams",
    "SchemeConfig",
    "WVAError",
    "make_pulse",
]
