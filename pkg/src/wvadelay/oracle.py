"""Brute-force numerics used to check the closed forms.

Nothing here calls the closed-form helpers of :mod:`wvadelay.scheme`; only
the raw output amplitudes are evaluated. Sums use :func:`math.fsum`, which is
exactly rounded and therefore independent of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfigurationError, GridResolutionError, InvalidParameterError
from .pulse import PulseParams
from .scheme import DARK_THRESHOLD, Port, SchemeConfig, output_amplitudes

__all__ = [
    "STANDARD_POINTS",
    "FrequencyGrid",
    "standard_grid",
    "integrate",
    "normalize",
    "numeric_centroid",
    "finite_difference",
    "default_tau_step",
]

STANDARD_POINTS = 2**14 + 1
STANDARD_HALF_WIDTH = 8.0


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform grid of frequency offsets (Hz) with an odd number of points."""

    f_min: float
    f_max: float
    n_points: int

    def __post_init__(self):
        if not self.f_max > self.f_min:
            raise InvalidParameterError("f_max must exceed f_min")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise InvalidParameterError(f"n_points must be odd and >= 3, got {self.n_points}")

    @property
    def spacing(self) -> float:
        return (self.f_max - self.f_min) / (self.n_points - 1)

    @property
    def frequencies(self) -> np.ndarray:
        return np.linspace(self.f_min, self.f_max, self.n_points)

    def covers(self, pulse: PulseParams, n_rms: float = 6.0) -> bool:
        rms = pulse.B / (2.0 * math.pi)
        return self.f_min <= -n_rms * rms and self.f_max >= n_rms * rms


def standard_grid(pulse: PulseParams, n_points: int = STANDARD_POINTS,
                  half_width: float = STANDARD_HALF_WIDTH) -> FrequencyGrid:
    """Symmetric grid spanning ``half_width`` rms widths of ``|Psi(f)|^2``."""
    edge = half_width * pulse.B / (2.0 * math.pi)
    return FrequencyGrid(-edge, edge, n_points)


def _trapezoid(values: np.ndarray, h: float) -> float:
    return h * (math.fsum(values.tolist()) - 0.5 * (values[0] + values[-1]))


def integrate(samples, grid: FrequencyGrid):
    """Composite trapezoid rule; returns complex for complex samples."""
    samples = np.asarray(samples)
    if samples.shape != (grid.n_points,):
        raise InvalidParameterError(
            f"expected {grid.n_points} samples, got shape {samples.shape}"
        )
    h = grid.spacing
    if np.iscomplexobj(samples):
        return complex(_trapezoid(samples.real, h), _trapezoid(samples.imag, h))
    return _trapezoid(samples.astype(float), h)


def normalize(samples, grid: FrequencyGrid, rtol: float = 1e-3) -> np.ndarray:
    """Scale ``samples`` to unit L2 norm on ``grid``.

    The norm is compared with the one obtained on every other grid point;
    a relative mismatch above ``rtol`` means the grid does not resolve the
    mode and raises :class:`GridResolutionError`.
    """
    samples = np.asarray(samples)
    power = integrate(np.abs(samples) ** 2, grid)
    if not power > 0:
        raise DegenerateConfigurationError("mode has zero norm on the grid")
    coarse = FrequencyGrid(grid.f_min, grid.f_max, (grid.n_points + 1) // 2)
    coarse_power = integrate(np.abs(samples[::2]) ** 2, coarse)
    if abs(coarse_power - power) > rtol * power:
        raise GridResolutionError(
            f"grid too coarse: norm {power:.6g} vs half-resolution {coarse_power:.6g}"
        )
    return samples / math.sqrt(power)


def numeric_centroid(cfg: SchemeConfig, port=Port.U, grid: FrequencyGrid | None = None) -> float:
    """First moment of ``|Phi_port(f)|^2`` by quadrature (Hz)."""
    grid = grid or standard_grid(cfg.pulse)
    f = grid.frequencies
    amp_u, amp_v = output_amplitudes(cfg, f)
    density = np.abs(amp_u if Port(port) is Port.U else amp_v) ** 2
    power = integrate(density, grid)
    if power < DARK_THRESHOLD:
        raise DegenerateConfigurationError(f"port {Port(port).value} is dark on the grid")
    return integrate(f * density, grid) / power


def finite_difference(fn, x: float, h: float) -> float:
    """Five-point central difference; exact for polynomials up to degree four."""
    if not h > 0:
        raise InvalidParameterError(f"step must be positive, got {h!r}")
    return (fn(x - 2 * h) - 8 * fn(x - h) + 8 * fn(x + h) - fn(x + 2 * h)) / (12 * h)


def default_tau_step(tau: float) -> float:
    return max(1e-21, abs(tau) * 1e-4)
