"""Spectral centroid shift of port u versus post-selection angle.

Scans theta over a full turn for several delays and reports where the shift
is largest, together with the port transmission at that angle.

    python3 scripts/centroid_shift_scan.py --tau-as 0 100 200 300 --out results/centroid.csv
"""

import argparse
import math

import numpy as np

from _common import write_rows
from wvadelay import make_pulse
from wvadelay.errors import DegenerateConfigurationError
from wvadelay.scheme import SchemeConfig, centroid_shift, port_transmission


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t0-fs", type=float, default=100.0)
    ap.add_argument("--lambda0-um", type=float, default=1.5)
    ap.add_argument("--tau-as", type=float, nargs="+", default=[0.0, 100.0, 200.0, 300.0])
    ap.add_argument("--points", type=int, default=36001)
    ap.add_argument("--out", default="results/centroid_shift.csv")
    args = ap.parse_args()

    pulse = make_pulse(args.lambda0_um * 1e-6, args.t0_fs * 1e-15)
    thetas = np.linspace(0.0, 360.0, args.points)
    rows = []
    for tau_as in args.tau_as:
        base = SchemeConfig(pulse, tau=tau_as * 1e-18, theta=0.0)
        best = (0.0, None, None)
        for theta in thetas:
            cfg = base.replace(theta=math.radians(theta))
            try:
                shift = centroid_shift(cfg)
            except DegenerateConfigurationError:
                rows.append((tau_as, float(theta), "", "degenerate"))
                continue
            rows.append((tau_as, float(theta), shift, ""))
            if abs(shift) > abs(best[0]):
                best = (shift, theta, port_transmission(cfg))
        if best[1] is None:
            print(f"tau = {tau_as:g} as: no shift anywhere")
        else:
            print(f"tau = {tau_as:g} as: max |shift| {best[0] / 1e12:+.4f} THz at theta = {best[1]:.2f} deg "
                  f"(port u transmission {best[2]:.3e})")
    write_rows(args.out, ["tau_as", "theta_deg", "delta_f_hz", "flag"], rows)


if __name__ == "__main__":
    main()
