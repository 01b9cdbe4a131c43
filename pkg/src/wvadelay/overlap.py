"""Mode overlaps and coherent-state overlaps before and after post-selection.

Exponents rather than overlaps are the stored quantity: ``|<a|b>|^2`` is
``exp(-exponent)`` and underflows long before the exponent loses precision.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfigurationError, GridResolutionError, InvalidOverlapError, InvalidParameterError
from .oracle import FrequencyGrid, integrate
from .scheme import (
    DARK_THRESHOLD,
    Port,
    SchemeConfig,
    one_minus_gamma_cos_carrier,
    one_plus_gamma_cos,
)

__all__ = [
    "OverlapSource",
    "Stage",
    "ModeOverlap",
    "StateOverlapReport",
    "coherent_exponent",
    "coherent_overlap",
    "mode_overlap_quadrature",
    "mode_overlap_closed",
    "input_state_overlap",
    "output_state_overlap",
    "port_state_exponent",
]

_RHO_SLACK = 1e-12


class OverlapSource(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


class Stage(str, enum.Enum):
    BEFORE_POSTSELECTION = "before_postselection"
    AFTER_POSTSELECTION = "after_postselection"


@dataclass(frozen=True)
class ModeOverlap:
    rho: complex
    source: OverlapSource

    @property
    def magnitude(self) -> float:
        return abs(self.rho)


@dataclass(frozen=True)
class StateOverlapReport:
    overlap_sq: float
    stage: Stage
    exponent: float

    @classmethod
    def from_exponent(cls, exponent: float, stage: Stage) -> "StateOverlapReport":
        return cls(math.exp(-exponent), Stage(stage), exponent)


def _check_rho(rho: complex) -> complex:
    rho = complex(rho)
    if abs(rho) > 1 + _RHO_SLACK:
        raise InvalidOverlapError(f"|rho| = {abs(rho):.15g} exceeds 1")
    return rho


def _check_photons(*values):
    for n in values:
        if not (math.isfinite(n) and n >= 0):
            raise InvalidParameterError(f"mean photon number must be >= 0, got {n!r}")


def coherent_exponent(N_a: float, N_b: float, rho: complex) -> float:
    """``N_a + N_b - 2 sqrt(N_a N_b) Re(rho)`` for real coherent amplitudes.

    Written as ``(sqrt(N_a) - sqrt(N_b))^2 + 2 sqrt(N_a N_b)(1 - Re rho)`` so
    that identical states give exactly zero.
    """
    _check_photons(N_a, N_b)
    rho = _check_rho(rho)
    root = math.sqrt(N_a * N_b)
    return (math.sqrt(N_a) - math.sqrt(N_b)) ** 2 + 2.0 * root * (1.0 - rho.real)


def coherent_overlap(N_a: float, N_b: float, rho: complex) -> float:
    """``|<beta|alpha>|^2`` for coherent states in modes with overlap ``rho``."""
    return math.exp(-coherent_exponent(N_a, N_b, rho))


def mode_overlap_quadrature(F, G, grid: FrequencyGrid) -> ModeOverlap:
    """``rho = integral F conj(G) df`` on ``grid`` by the trapezoid rule.

    Both modes should already be normalised. A norm off by more than 1e-6 is
    corrected; off by more than 1e-3 means the grid cannot represent the mode.
    """
    F = np.asarray(F, dtype=complex)
    G = np.asarray(G, dtype=complex)
    norms = []
    for mode in (F, G):
        n = integrate(np.abs(mode) ** 2, grid)
        if abs(n - 1.0) > 1e-3:
            raise GridResolutionError(f"mode norm {n:.9g} on grid; grid too coarse or narrow")
        norms.append(n if abs(n - 1.0) > 1e-6 else 1.0)
    rho = integrate(F * np.conj(G), grid) / math.sqrt(norms[0] * norms[1])
    return ModeOverlap(complex(rho), OverlapSource.QUADRATURE)


@dataclass(frozen=True)
class _PortTerms:
    half_amp: float   # cos(Gamma_p/2); its square is the transmission at tau = 0
    lit: float        # 1 + gamma cos(phi_p), twice the transmission at tau
    gamma_sin: float  # gamma sin(phi_p)
    half_gamma: float  # Gamma_p / 2


def _port_terms(cfg: SchemeConfig, port) -> _PortTerms:
    # port v is port u with Gamma -> Gamma + pi
    port = Port(port)
    half = 0.5 * cfg.big_gamma
    if port is Port.U:
        return _PortTerms(math.cos(half), one_plus_gamma_cos(cfg, port),
                          cfg.gamma * math.sin(cfg.phi), half)
    return _PortTerms(-math.sin(half), one_plus_gamma_cos(cfg, port),
                      -cfg.gamma * math.sin(cfg.phi), half + 0.5 * math.pi)


def mode_overlap_closed(cfg: SchemeConfig, port=Port.U) -> ModeOverlap:
    """Closed-form overlap between the normalised port modes at delays 0 and ``tau``.

    Implements the textbook port-u expression

    ``[1 + cos G + g cos wt + g cos(wt - G) - i(sin G + g sin wt + g sin(wt - G))]
    / (2 [1 + cos G]^1/2 [1 + g cos(wt - G)]^1/2)``

    after cancelling the common factor ``2 cos(G/2)``, which leaves
    ``sign(cos(G/2)) e^{-iG/2} (D - i g sin phi) / sqrt(2 D)`` with
    ``D = 1 + g cos phi``. Port v follows from ``G -> G + pi``.

    Raises
    ------
    DegenerateConfigurationError
        If the port is dark at either delay.
    """
    t = _port_terms(cfg, port)
    if t.half_amp**2 < DARK_THRESHOLD or 0.5 * t.lit < DARK_THRESHOLD:
        raise DegenerateConfigurationError(
            f"port {Port(port).value} is dark; mode overlap undefined"
        )
    sign = 1.0 if t.half_amp > 0 else -1.0
    rho = sign * cmath.exp(-1j * t.half_gamma) * complex(t.lit, -t.gamma_sin) / math.sqrt(2.0 * t.lit)
    return ModeOverlap(rho, OverlapSource.CLOSED_FORM)


def port_state_exponent(cfg: SchemeConfig, port=Port.U) -> float:
    """Coherent-overlap exponent between the ``tau = 0`` and ``tau`` states in one port.

    Built from the port photon numbers ``N T_p(0)``, ``N T_p(tau)`` and the
    port mode overlap. The mode-overlap complement is taken from

    ``2 sqrt(a b) (1 - Re rho) = (1 - g cos wt) - (sqrt(a) - sqrt(b))^2``

    with ``a = 2 T_p(0)``, ``b = 2 T_p(tau)``, whose right-hand side has no
    cancellation when ``rho`` is close to one.
    """
    N = cfg.n_photons
    t = _port_terms(cfg, port)
    a = 2.0 * t.half_amp**2
    b = t.lit
    if a * 0.5 < DARK_THRESHOLD or b * 0.5 < DARK_THRESHOLD:
        # overlap of a coherent state with (near) vacuum
        return 0.5 * N * (a + b)
    # a - b via product-to-sum identities
    wt = cfg.carrier_phase
    sign = 1.0 if Port(port) is Port.U else -1.0
    a_minus_b = sign * (cfg.one_minus_gamma * math.cos(cfg.phi)
                        + 2.0 * math.sin(0.5 * wt) * math.sin(0.5 * wt - cfg.big_gamma))
    root_gap = a_minus_b**2 / (math.sqrt(a) + math.sqrt(b)) ** 2
    overlap_gap = one_minus_gamma_cos_carrier(cfg) - root_gap
    one_minus_re_rho = overlap_gap / (2.0 * math.sqrt(a * b))
    N_a, N_b = 0.5 * N * a, 0.5 * N * b
    # sqrt(N_a) - sqrt(N_b) without subtracting two nearly equal roots
    root_diff = math.sqrt(0.5 * N) * a_minus_b / (math.sqrt(a) + math.sqrt(b))
    return root_diff**2 + 2.0 * math.sqrt(N_a * N_b) * one_minus_re_rho


def input_state_overlap(cfg: SchemeConfig) -> StateOverlapReport:
    """Overlap of the two-polarisation states before post-selection.

    ``exp[-N (1 - gamma cos(omega0 tau))]``.
    """
    exponent = cfg.n_photons * one_minus_gamma_cos_carrier(cfg)
    return StateOverlapReport.from_exponent(exponent, Stage.BEFORE_POSTSELECTION)


def output_state_overlap(cfg: SchemeConfig) -> StateOverlapReport:
    """Product of the per-port overlaps after post-selection.

    Equal to :func:`input_state_overlap` for every ``theta`` because the
    projection is unitary.
    """
    exponent = port_state_exponent(cfg, Port.U) + port_state_exponent(cfg, Port.V)
    return StateOverlapReport.from_exponent(exponent, Stage.AFTER_POSTSELECTION)
