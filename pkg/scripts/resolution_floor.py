"""Effective overlap of a resolution-limited detector and the resulting error.

Writes the map ``rho -> rho_eff`` and the error-versus-photons curves at the
unprojected angle and at the overlap resonance.

    python3 scripts/resolution_floor.py --a 0.9 --n 100
"""

import argparse
import math

import numpy as np

from _common import write_rows
from wvadelay import make_pulse
from wvadelay.detector import effective_overlap, resolution_limited_error
from wvadelay.overlap import mode_overlap_closed
from wvadelay.scheme import SchemeConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=float, default=0.9)
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--theta-deg", type=float, nargs="+", default=[0.0, 97.2])
    ap.add_argument("--out-prefix", default="results/resolution_floor")
    args = ap.parse_args()

    rhos = np.linspace(0.0, 1.0, 1001)
    write_rows(f"{args.out_prefix}_map.csv", ["rho", "rho_eff"],
               [(float(r), effective_overlap(float(r), args.a, args.n)) for r in rhos])

    base = SchemeConfig(make_pulse(1.5e-6, 100e-15), tau=100e-18, theta=0.0)
    photons = np.geomspace(1.0, 1e9, 91)
    rows = []
    for theta in args.theta_deg:
        cfg = base.replace(theta=math.radians(theta))
        rho = mode_overlap_closed(cfg).magnitude
        curve = [resolution_limited_error(cfg, float(N), args.a, args.n) for N in photons]
        rows.extend((theta, float(N), p) for N, p in zip(photons, curve))
        print(f"theta = {theta:6.2f} deg: |rho| = {rho:.4e}, rho_eff = {effective_overlap(min(rho, 1.0), args.a, args.n):.6f}, "
              f"P_error(1e3) = {curve[30]:.3e}, P_error(1e9) = {curve[-1]:.3e}")
    write_rows(f"{args.out_prefix}_error.csv", ["theta_deg", "n_photons", "p_error"], rows)


if __name__ == "__main__":
    main()
