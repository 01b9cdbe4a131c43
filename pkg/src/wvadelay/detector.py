"""Technical-noise detector models.

Two limits are modelled: a detector that saturates at ``N0`` photons, and a
detector whose resolution floor makes modes with overlap above ``a``
indistinguishable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateConfigurationError, InvalidParameterError, NoSolutionError
from .estimation import helstrom_error_from_exponent
from .overlap import Stage, StateOverlapReport, _port_terms, mode_overlap_closed
from .scheme import DARK_THRESHOLD, Port, SchemeConfig, one_minus_gamma_cos_carrier, one_plus_gamma_cos

__all__ = [
    "PhotonBudget",
    "ResolutionFloor",
    "DetectorLimits",
    "required_input_photons",
    "saturated_overlap",
    "solve_projection_for_budget",
    "effective_overlap",
    "resolution_limited_error",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhotonBudget:
    N0: float

    def __post_init__(self):
        if not (math.isfinite(self.N0) and self.N0 > 0):
            raise InvalidParameterError(f"N0 must be positive, got {self.N0!r}")


@dataclass(frozen=True)
class ResolutionFloor:
    a: float
    n: int

    def __post_init__(self):
        _check_floor(self.a, self.n)


DetectorLimits = Union[PhotonBudget, ResolutionFloor]


def _check_floor(a, n):
    if not 0.0 < a < 1.0:
        raise InvalidParameterError(f"floor parameter a must lie in (0, 1), got {a!r}")
    if int(n) != n or n < 1:
        raise InvalidParameterError(f"sharpness n must be a positive integer, got {n!r}")


def _lit_port_u(cfg: SchemeConfig) -> float:
    d = one_plus_gamma_cos(cfg, Port.U)
    if 0.5 * d < DARK_THRESHOLD:
        raise DegenerateConfigurationError("port u is dark; no photons reach the detector")
    return d


def required_input_photons(cfg: SchemeConfig, N0: float) -> float:
    """Input photons needed for exactly ``N0`` photons to leave port u."""
    PhotonBudget(N0)
    return 2.0 * N0 / _lit_port_u(cfg)


def saturated_overlap(cfg: SchemeConfig, N0: float) -> StateOverlapReport:
    """Best state overlap when the port-u detector sees exactly ``N0`` photons.

    The input is raised to ``N0 / T_u`` photons, giving
    ``exp[-2 N0 (1 - g cos wt) / (1 + g cos(wt - G))]``.
    """
    N_in = required_input_photons(cfg, N0)
    exponent = N_in * one_minus_gamma_cos_carrier(cfg)
    return StateOverlapReport.from_exponent(exponent, Stage.AFTER_POSTSELECTION)


def solve_projection_for_budget(cfg: SchemeConfig, N_in: float, N0: float) -> list[float]:
    """Post-selection angles for which ``N0`` of ``N_in`` photons exit port u.

    Returns both roots of ``(1 + g cos(wt - G))/2 = N0/N_in`` within one
    period, as angles in ``[0, 2 pi)`` sorted ascending. When the target is
    at the edge of the achievable range the two roots coincide.

    Raises
    ------
    NoSolutionError
        If ``N0/N_in`` lies outside ``[(1 - g)/2, (1 + g)/2]`` by more than 1e-12.
    """
    if not (math.isfinite(N_in) and math.isfinite(N0) and 0 < N0 <= N_in):
        raise InvalidParameterError(f"need 0 < N0 <= N_in, got N0={N0!r}, N_in={N_in!r}")
    g, omg = cfg.gamma, cfg.one_minus_gamma
    target = N0 / N_in
    lo, hi = 0.5 * omg, 1.0 - 0.5 * omg
    if not lo - 1e-12 <= target <= hi + 1e-12:
        raise NoSolutionError(
            f"transmission {target:.6g} outside achievable [{lo:.6g}, {hi:.6g}]", (lo, hi)
        )
    # cos^2(phi/2) = (2t - (1 - g)) / (2g), solved on the half angle for accuracy near t = 1
    cos2 = min(max((2.0 * target - omg) / (2.0 * g), 0.0), 1.0)
    half = math.acos(math.sqrt(cos2))
    roots = []
    for phi in (2.0 * half, -2.0 * half):
        theta = (cfg.carrier_phase - 0.5 * math.pi - phi) % TWO_PI
        roots.append(theta if theta < TWO_PI else 0.0)
    return sorted(roots)


def effective_overlap(rho_abs: float, a: float, n: int) -> float:
    """Resolution-floor model ``1 - (1 - rho) exp[-(rho/a)^n]``.

    Overlaps well above ``a`` map to one (indistinguishable); those well
    below are passed through unchanged.
    """
    _check_floor(a, n)
    if not 0.0 <= rho_abs <= 1.0:
        raise InvalidParameterError(f"rho_abs must lie in [0, 1], got {rho_abs!r}")
    try:
        power = (rho_abs / a) ** n
    except OverflowError:  # far above the floor: exp(-power) is exactly zero
        return 1.0
    return 1.0 - (1.0 - rho_abs) * math.exp(-power)


def resolution_limited_error(cfg: SchemeConfig, N: float, a: float, n: int) -> float:
    """Helstrom error seen by a detector with a mode-resolution floor.

    Per port, the coherent-overlap exponent keeps only its mode term with
    the effective overlap in place of the true one,
    ``2 sqrt(N_a N_b) (1 - rho_eff(|rho|))``. A detector that reads the
    normalised spectrum is blind to the intensity and carrier-phase parts,
    so ``rho_eff = 1`` leaves the states indistinguishable at any ``N``.
    """
    _check_floor(a, n)
    if not (math.isfinite(N) and N >= 0):
        raise InvalidParameterError(f"photon number must be >= 0, got {N!r}")
    if cfg.one_minus_gamma == 0.0:
        return 0.5
    _lit_port_u(cfg)
    exponent = 0.0
    for port in (Port.U, Port.V):
        t = _port_terms(cfg, port)
        T_0, T_tau = t.half_amp**2, 0.5 * t.lit
        if T_0 < DARK_THRESHOLD or T_tau < DARK_THRESHOLD:
            continue
        rho_eff = effective_overlap(min(mode_overlap_closed(cfg, port).magnitude, 1.0), a, n)
        exponent += 2.0 * N * math.sqrt(T_0 * T_tau) * (1.0 - rho_eff)
    return helstrom_error_from_exponent(exponent)
