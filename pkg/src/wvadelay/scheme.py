"""Delay interferometer with polarisation pre- and post-selection.

Two orthogonal polarisations are delayed by ``tau0`` and ``tau0 + tau`` and
then projected onto ``u = (x + y e^{i theta})/sqrt(2)`` or
``v = (x - y e^{i theta})/sqrt(2)``. With ``Gamma = pi/2 + theta`` and
``phi = omega0*tau - Gamma`` the port-u power fraction is
``(1 + gamma cos phi)/2``.

Every ``1 +/- gamma cos(...)`` is evaluated as ``(1 - gamma) + 2 gamma cos^2``
(or ``sin^2``) of the half angle, which keeps full relative precision near
the dark port where the naive sum cancels to ~1e-13.
"""

from __future__ import annotations

import dataclasses
import enum
import math

import numpy as np

from .errors import DegenerateConfigurationError, InvalidParameterError
from .pulse import LN2, PulseParams, gamma_complement, gamma_factor, spectral_amplitude

__all__ = [
    "DARK_THRESHOLD",
    "Port",
    "SchemeConfig",
    "output_amplitudes",
    "port_transmission",
    "insertion_loss_db",
    "differential_power",
    "centroid_shift",
    "centroid_derivative",
]

# Port power fraction below which centroids and mode overlaps are undefined.
DARK_THRESHOLD = 1e-300


class Port(str, enum.Enum):
    U = "u"
    V = "v"


@dataclasses.dataclass(frozen=True)
class SchemeConfig:
    """Full experiment configuration in SI units.

    ``theta`` is the post-selection angle in radians and ``n_photons`` the
    mean photon number entering the interferometer.
    """

    pulse: PulseParams
    tau: float
    theta: float
    tau0: float = 0.0
    n_photons: float = 0.0

    def __post_init__(self):
        for name in ("tau", "theta", "tau0", "n_photons"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value!r}")
        if self.n_photons < 0:
            raise InvalidParameterError(f"n_photons must be >= 0, got {self.n_photons!r}")

    @property
    def big_gamma(self) -> float:
        return 0.5 * math.pi + self.theta

    @property
    def carrier_phase(self) -> float:
        """``omega0 * tau``."""
        return self.pulse.omega0 * self.tau

    @property
    def phi(self) -> float:
        return self.carrier_phase - self.big_gamma

    @property
    def gamma(self) -> float:
        return gamma_factor(self.pulse, self.tau)

    @property
    def one_minus_gamma(self) -> float:
        return gamma_complement(self.pulse, self.tau)

    def replace(self, **changes) -> "SchemeConfig":
        return dataclasses.replace(self, **changes)


def _port_sign(port) -> int:
    port = Port(port)
    return 1 if port is Port.U else -1


def one_plus_gamma_cos(cfg: SchemeConfig, port=Port.U) -> float:
    """``1 + s*gamma*cos(phi)`` with ``s = +1`` for port u and ``-1`` for port v."""
    g, omg = cfg.gamma, cfg.one_minus_gamma
    half = 0.5 * cfg.phi
    trig = math.cos(half) if _port_sign(port) > 0 else math.sin(half)
    return omg + 2.0 * g * trig * trig


def one_minus_gamma_cos_carrier(cfg: SchemeConfig) -> float:
    """``1 - gamma*cos(omega0*tau)``, the distance between the two pre-selected states."""
    s = math.sin(0.5 * cfg.carrier_phase)
    return cfg.one_minus_gamma + 2.0 * cfg.gamma * s * s


def output_amplitudes(cfg: SchemeConfig, f):
    """Un-normalised spectral amplitudes in ports u and v at frequency offsets ``f``.

    Returns
    -------
    (ndarray, ndarray)
        ``Phi_u`` and ``Phi_v`` in 1/sqrt(Hz); ``|Phi_u|^2 + |Phi_v|^2 = Psi(f)^2``.
    """
    p = cfg.pulse
    f = np.asarray(f, dtype=float)
    omega = p.omega0 + 2.0 * math.pi * f
    psi = omega * cfg.tau - cfg.big_gamma
    # (1 +/- e^{i psi})/2 = e^{i psi/2} cos(psi/2), -i e^{i psi/2} sin(psi/2)
    common = spectral_amplitude(p, f) * np.exp(1j * (omega * cfg.tau0 + 0.5 * psi))
    return common * np.cos(0.5 * psi), -1j * common * np.sin(0.5 * psi)


def port_transmission(cfg: SchemeConfig, port=Port.U) -> float:
    """Fraction of the input power leaving ``port``; the two ports sum to one."""
    return 0.5 * one_plus_gamma_cos(cfg, port)


def insertion_loss_db(cfg: SchemeConfig, port=Port.U) -> float:
    t = port_transmission(cfg, port)
    return 10.0 * math.log10(t) if t > 0 else -math.inf


def differential_power(cfg: SchemeConfig, port=Port.U) -> float:
    """``[P_out(tau) - P_out(0)] / P_in`` for ``port``, including the gamma factor.

    For port v this is ``(cos Gamma - gamma cos phi)/2``, which tends to the
    textbook ``(cos Gamma - cos phi)/2`` as gamma -> 1.
    """
    g, omg = cfg.gamma, cfg.one_minus_gamma
    half_carrier = 0.5 * cfg.carrier_phase
    # gamma cos(phi) - cos(Gamma), rewritten with product-to-sum identities
    diff_u = -0.5 * (
        omg * math.cos(cfg.big_gamma)
        + 2.0 * g * math.sin(half_carrier) * math.sin(half_carrier - cfg.big_gamma)
    )
    return diff_u * _port_sign(port)


def _require_lit_port_u(cfg: SchemeConfig) -> float:
    d = one_plus_gamma_cos(cfg, Port.U)
    if 0.5 * d < DARK_THRESHOLD:
        raise DegenerateConfigurationError(
            f"port u is dark (transmission {0.5 * d:.3g}); centroid undefined"
        )
    return d


def centroid_shift(cfg: SchemeConfig) -> float:
    """Shift of the port-u spectral centroid (Hz) caused by the delay ``tau``.

    ``-(tau ln2 / (pi T0^2)) * gamma sin(phi) / (1 + gamma cos(phi))``.

    Raises
    ------
    DegenerateConfigurationError
        If port u carries no power.
    """
    d = _require_lit_port_u(cfg)
    T0 = cfg.pulse.T0
    return -(cfg.tau * LN2 / (math.pi * T0 * T0)) * cfg.gamma * math.sin(cfg.phi) / d


def centroid_derivative(cfg: SchemeConfig) -> float:
    """Exact ``d(centroid_shift)/d tau`` (Hz/s), including the tau-dependence of gamma."""
    d = _require_lit_port_u(cfg)
    p = cfg.pulse
    g, omg = cfg.gamma, cfg.one_minus_gamma
    B2 = p.B * p.B
    phi = cfg.phi
    sin_phi = math.sin(phi)
    c = math.cos(0.5 * phi)
    gamma_plus_cos = 2.0 * c * c - omg
    bracket = B2 * cfg.tau**2 * sin_phi - cfg.carrier_phase * gamma_plus_cos - sin_phi * d
    return g * B2 * bracket / (2.0 * math.pi * d * d)
