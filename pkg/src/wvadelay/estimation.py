"""Discrimination and estimation bounds for the delay ``tau``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import DegenerateConfigurationError, InvalidParameterError
from .overlap import input_state_overlap
from .pulse import PulseParams, gamma_complement, gamma_factor
from .scheme import Port, SchemeConfig, centroid_derivative, port_transmission

__all__ = [
    "helstrom_error",
    "helstrom_error_from_exponent",
    "error_vs_photons",
    "CramerRaoBound",
    "cramer_rao_bound",
    "FisherReport",
    "fisher_information",
    "fisher_endpoints",
    "fisher_endpoints_closed",
]


def helstrom_error(overlap_sq: float) -> float:
    """Minimum error probability for two equiprobable pure states.

    Evaluates ``(1 - sqrt(1 - s))/2`` as ``s / (2 (1 + sqrt(1 - s)))``, which
    keeps full relative precision when ``s`` is tiny.
    """
    s = float(overlap_sq)
    if not 0.0 <= s <= 1.0:
        raise InvalidParameterError(f"overlap_sq must lie in [0, 1], got {overlap_sq!r}")
    return 0.5 * s / (1.0 + math.sqrt(1.0 - s))


def helstrom_error_from_exponent(exponent: float) -> float:
    """:func:`helstrom_error` of ``exp(-exponent)`` without forming ``1 - s`` by subtraction."""
    if not exponent >= 0:
        raise InvalidParameterError(f"exponent must be >= 0, got {exponent!r}")
    s = math.exp(-exponent)
    return 0.5 * s / (1.0 + math.sqrt(-math.expm1(-exponent)))


def error_vs_photons(cfg: SchemeConfig, N_list: Iterable[float]) -> list[tuple[float, float]]:
    """Helstrom error of the pre-selected states for each mean photon number."""
    rows = []
    for N in N_list:
        N = float(N)
        if not N >= 0:
            raise InvalidParameterError(f"photon number must be >= 0, got {N!r}")
        report = input_state_overlap(cfg.replace(n_photons=N))
        rows.append((N, helstrom_error_from_exponent(report.exponent)))
    return rows


class CramerRaoBound(NamedTuple):
    variance: float  # s^2
    rms: float       # s


def cramer_rao_bound(p: PulseParams, N: float) -> CramerRaoBound:
    """Quantum Cramer-Rao bound ``1 / (2 N (omega0^2 + B^2))`` on the delay variance."""
    if not (math.isfinite(N) and N > 0):
        raise InvalidParameterError(f"photon number must be positive, got {N!r}")
    variance = 1.0 / (2.0 * N * (p.omega0**2 + p.B**2))
    return CramerRaoBound(variance, math.sqrt(variance))


@dataclass(frozen=True)
class FisherReport:
    """Fisher information of the Gaussian centroid-readout model.

    Single-configuration reports fill ``I_tau``; endpoint reports fill the
    ``phi = 0`` and ``phi = pi`` values and their ratio.
    """

    sigma: float
    N_detected: Optional[float] = None
    I_tau: Optional[float] = None
    I_phi0: Optional[float] = None
    I_phipi: Optional[float] = None
    enhancement_ratio: Optional[float] = None


def _check_sigma(sigma: float):
    if not (math.isfinite(sigma) and sigma > 0):
        raise InvalidParameterError(f"sigma must be positive, got {sigma!r}")


def fisher_information(cfg: SchemeConfig, sigma: float, N_detected: float) -> FisherReport:
    """``I(tau) = N / sigma^2 * (d centroid / d tau)^2`` for ``N`` detected photons.

    Raises
    ------
    DegenerateConfigurationError
        On a dark port u.
    """
    _check_sigma(sigma)
    if not N_detected >= 0:
        raise InvalidParameterError(f"N_detected must be >= 0, got {N_detected!r}")
    slope = centroid_derivative(cfg)
    return FisherReport(sigma=sigma, N_detected=N_detected,
                        I_tau=N_detected / sigma**2 * slope**2)


def _endpoint_config(p: PulseParams, tau: float, phi: float) -> SchemeConfig:
    # phi = omega0 tau - pi/2 - theta
    return SchemeConfig(p, tau=tau, theta=p.omega0 * tau - 0.5 * math.pi - phi)


def fisher_endpoints(p: PulseParams, tau: float, N0: float, sigma: float) -> FisherReport:
    """Fisher information at ``phi = 0`` and ``phi = pi`` with ``N0`` input photons.

    Each endpoint is the full :func:`fisher_information` evaluated with the
    photons that actually reach port u, ``N0 (1 +/- gamma)/2``. The ratio
    ``I_phipi / I_phi0`` equals ``(1 + gamma)/(1 - gamma)``.
    """
    _check_sigma(sigma)
    if not (math.isfinite(N0) and N0 > 0):
        raise InvalidParameterError(f"N0 must be positive, got {N0!r}")
    if gamma_complement(p, tau) == 0.0:
        raise DegenerateConfigurationError("tau = 0: no delay to estimate, ratio undefined")
    values = []
    for phi in (0.0, math.pi):
        cfg = _endpoint_config(p, tau, phi)
        detected = N0 * port_transmission(cfg, Port.U)
        values.append(fisher_information(cfg, sigma, detected).I_tau)
    I0, Ipi = values
    return FisherReport(sigma=sigma, I_phi0=I0, I_phipi=Ipi, enhancement_ratio=Ipi / I0)


def fisher_endpoints_closed(p: PulseParams, tau: float, N0: float, sigma: float) -> tuple[float, float]:
    """Closed forms ``N0 g^2 B^4 (w0 tau)^2 / (8 pi^2 sigma^2 (1 +/- g))``."""
    g = gamma_factor(p, tau)
    common = N0 * g**2 * p.B**4 * (p.omega0 * tau) ** 2 / (8.0 * math.pi**2 * sigma**2)
    return common / (1.0 + g), common / gamma_complement(p, tau)
