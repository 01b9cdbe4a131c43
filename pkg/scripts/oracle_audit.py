"""Compare every closed form against its brute-force oracle on random configurations.

    python3 scripts/oracle_audit.py --count 200 --seed 3
"""

import argparse
import math

import numpy as np

from wvadelay import make_pulse
from wvadelay.oracle import default_tau_step, finite_difference, normalize, numeric_centroid, standard_grid
from wvadelay.overlap import input_state_overlap, mode_overlap_closed, mode_overlap_quadrature, output_state_overlap
from wvadelay.scheme import SchemeConfig, centroid_derivative, centroid_shift, output_amplitudes, port_transmission


def sample(rng):
    tau = 10 ** rng.uniform(-18, -14)
    T0 = 10 ** rng.uniform(math.log10(50e-15), math.log10(2e-12))
    return SchemeConfig(make_pulse(1.5e-6, T0), tau=tau, theta=rng.uniform(0, 2 * math.pi),
                        n_photons=10 ** rng.uniform(0, 9))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    worst = {"rho": 0.0, "centroid": 0.0, "derivative": 0.0, "unitarity": 0.0}
    done = 0
    while done < args.count:
        cfg = sample(rng)
        h = default_tau_step(cfg.tau)
        if min(port_transmission(cfg.replace(tau=t)) for t in (0.0, cfg.tau - 2 * h, cfg.tau + 2 * h)) < 1e-3:
            continue
        done += 1
        grid = standard_grid(cfg.pulse)
        f = grid.frequencies
        ref = normalize(output_amplitudes(cfg.replace(tau=0.0), f)[0], grid)
        dly = normalize(output_amplitudes(cfg, f)[0], grid)
        worst["rho"] = max(worst["rho"], abs(mode_overlap_quadrature(ref, dly, grid).rho - mode_overlap_closed(cfg).rho))
        closed = centroid_shift(cfg)
        worst["centroid"] = max(worst["centroid"], abs(numeric_centroid(cfg, grid=grid) - closed) / max(abs(closed), 1e6))
        fd = finite_difference(lambda t: centroid_shift(cfg.replace(tau=t)), cfg.tau, h)
        worst["derivative"] = max(worst["derivative"], abs(centroid_derivative(cfg) / fd - 1))
        e_in, e_out = input_state_overlap(cfg).exponent, output_state_overlap(cfg).exponent
        worst["unitarity"] = max(worst["unitarity"], abs(e_out - e_in) / e_in)
    print(f"{args.count} configurations (seed {args.seed})")
    print(f"  complex rho, closed vs quadrature (abs):        {worst['rho']:.2e}")
    print(f"  centroid, closed vs quadrature (rel, >=1 MHz):  {worst['centroid']:.2e}")
    print(f"  derivative, closed vs 5-point stencil (rel):    {worst['derivative']:.2e}")
    print(f"  exponent after vs before post-selection (rel):  {worst['unitarity']:.2e}")


if __name__ == "__main__":
    main()
