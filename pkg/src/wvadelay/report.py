"""One-configuration summary used by the ``report`` CLI command."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateConfigurationError
from .estimation import helstrom_error_from_exponent
from .overlap import input_state_overlap, mode_overlap_closed, output_state_overlap
from .scheme import Port, SchemeConfig, insertion_loss_db, port_transmission


@dataclass(frozen=True)
class DistinguishabilityReport:
    rho_re: Optional[float]
    rho_im: Optional[float]
    rho_abs: Optional[float]
    overlap_sq: float
    exponent: float
    exponent_after_postselection: float
    helstrom_error: float
    transmission_u: float
    transmission_v: float
    insertion_loss_db: float
    n_out: float
    degenerate: bool


def distinguishability_report(cfg: SchemeConfig) -> DistinguishabilityReport:
    """Port-u mode overlap, state overlap, error bound and port powers for ``cfg``.

    The mode overlap fields are ``None`` when port u is dark at either delay.
    """
    try:
        rho = mode_overlap_closed(cfg, Port.U).rho
        rho_fields = (rho.real, rho.imag, abs(rho))
        degenerate = False
    except DegenerateConfigurationError:
        rho_fields = (None, None, None)
        degenerate = True
    before = input_state_overlap(cfg)
    after = output_state_overlap(cfg)
    t_u = port_transmission(cfg, Port.U)
    return DistinguishabilityReport(
        *rho_fields,
        overlap_sq=before.overlap_sq,
        exponent=before.exponent,
        exponent_after_postselection=after.exponent,
        helstrom_error=helstrom_error_from_exponent(before.exponent),
        transmission_u=t_u,
        transmission_v=port_transmission(cfg, Port.V),
        insertion_loss_db=insertion_loss_db(cfg, Port.U),
        n_out=cfg.n_photons * t_u,
        degenerate=degenerate,
    )
