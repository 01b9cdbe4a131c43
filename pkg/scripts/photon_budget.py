"""Helstrom error versus photon number, with and without a saturating detector.

Prints the unprojected error at ``N0`` photons, the projection angles that
let ``N_in`` input photons deliver exactly ``N0`` to the detector, and the
error reached at those angles.

    python3 scripts/photon_budget.py --n0 1e6 --n-in 1e7
"""

import argparse
import math

import numpy as np

from _common import write_rows
from wvadelay import make_pulse
from wvadelay.detector import saturated_overlap, solve_projection_for_budget
from wvadelay.estimation import error_vs_photons, helstrom_error_from_exponent
from wvadelay.scheme import SchemeConfig, port_transmission


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t0-fs", type=float, default=1000.0)
    ap.add_argument("--tau-as", type=float, default=1.0)
    ap.add_argument("--n0", type=float, default=1e6, help="photons the detector can take")
    ap.add_argument("--n-in", type=float, default=1e7, help="photons available at the input")
    ap.add_argument("--out", default="results/photon_budget.csv")
    args = ap.parse_args()

    cfg = SchemeConfig(make_pulse(1.5e-6, args.t0_fs * 1e-15), tau=args.tau_as * 1e-18, theta=0.0)
    photons = np.geomspace(1e4, 1e8, 81)
    curve = error_vs_photons(cfg, photons)
    write_rows(args.out, ["n_photons", "p_error"], curve)

    (_, p_n0), (_, p_nin) = error_vs_photons(cfg, [args.n0, args.n_in])
    print(f"unprojected: P_error(N0 = {args.n0:.3g}) = {p_n0:.3e}, P_error(N_in = {args.n_in:.3g}) = {p_nin:.3e}")
    for theta in solve_projection_for_budget(cfg, args.n_in, args.n0):
        at = cfg.replace(theta=theta)
        sat = saturated_overlap(at, args.n0)
        print(f"  theta = {math.degrees(theta):8.4f} deg: T_u = {port_transmission(at):.6f}, "
              f"P_error = {helstrom_error_from_exponent(sat.exponent):.3e}")


if __name__ == "__main__":
    main()
