import math

import numpy as np
import pytest

from wvadelay.pulse import make_pulse
from wvadelay.scheme import SchemeConfig

FS, AS = 1e-15, 1e-18


@pytest.fixture
def pulse_100fs():
    return make_pulse(1.5e-6, 100 * FS)


@pytest.fixture
def pulse_1ps():
    return make_pulse(1.5e-6, 1e-12)


@pytest.fixture
def centroid_cfg(pulse_100fs):
    """T0 = 100 fs, tau = 100 as, theta = 96.7 deg: strong positive centroid shift."""
    return SchemeConfig(pulse_100fs, tau=100 * AS, theta=math.radians(96.7))


@pytest.fixture
def budget_cfg(pulse_1ps):
    return SchemeConfig(pulse_1ps, tau=1 * AS, theta=math.radians(53.2), n_photons=1e7)


def random_config(rng: np.random.Generator, n_photons: float = 0.0) -> SchemeConfig:
    """tau in [1 as, 10 fs], T0 in [50 fs, 2 ps] (log-uniform), theta uniform in [0, 2 pi)."""
    tau = 10 ** rng.uniform(math.log10(1 * AS), math.log10(10 * FS))
    T0 = 10 ** rng.uniform(math.log10(50 * FS), math.log10(2e-12))
    theta = rng.uniform(0.0, 2 * math.pi)
    return SchemeConfig(make_pulse(1.5e-6, T0), tau=tau, theta=theta, n_photons=n_photons)


# acceptance results, printed once at the end of the session
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def quadrature_rho(cfg: SchemeConfig, port="u", grid=None) -> complex:
    """Brute-force port overlap ``integral F conj(G) df`` with F undelayed and G delayed."""
    from wvadelay.oracle import normalize, standard_grid
    from wvadelay.overlap import mode_overlap_quadrature
    from wvadelay.scheme import output_amplitudes

    grid = grid or standard_grid(cfg.pulse)
    f = grid.frequencies
    idx = 0 if port == "u" else 1
    delayed = normalize(output_amplitudes(cfg, f)[idx], grid)
    reference = normalize(output_amplitudes(cfg.replace(tau=0.0), f)[idx], grid)
    return mode_overlap_quadrature(reference, delayed, grid).rho
