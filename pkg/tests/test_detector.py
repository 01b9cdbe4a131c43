import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from wvadelay.errors import InvalidParameterError, NoSolutionError
from wvadelay.estimation import helstrom_error
from wvadelay.detector import (
    PhotonBudget, ResolutionFloor, effective_overlap, required_input_photons,
    resolution_limited_error, saturated_overlap, solve_projection_for_budget,
)
from wvadelay.overlap import input_state_overlap
from wvadelay.pulse import make_pulse
from wvadelay.scheme import SchemeConfig, port_transmission

FS, AS = 1e-15, 1e-18


def test_limit_types_validate():
    PhotonBudget(1e6)
    ResolutionFloor(0.9, 100)
    for bad in (0.0, -1.0, math.inf):
        with pytest.raises(InvalidParameterError):
            PhotonBudget(bad)
    for a, n in ((0.0, 10), (1.0, 10), (0.9, 0), (0.9, 2.5)):
        with pytest.raises(InvalidParameterError):
            ResolutionFloor(a, n)


def test_saturated_overlap_budget_point(budget_cfg):
    assert required_input_photons(budget_cfg, 1e6) == pytest.approx(1e6 / 0.1000110081701695, rel=1e-12)
    report = saturated_overlap(budget_cfg, 1e6)
    assert report.overlap_sq == pytest.approx(3.7e-4, rel=0.02)
    assert helstrom_error(report.overlap_sq) == pytest.approx(9.3e-5, rel=0.01)
    unprojected = input_state_overlap(budget_cfg.replace(n_photons=1e6))
    assert helstrom_error(unprojected.overlap_sq) == pytest.approx(0.13, rel=0.01)


def _full_transmission(cfg):
    return cfg.replace(theta=cfg.carrier_phase - math.pi / 2)


def test_saturated_full_transmission_exact(pulse_100fs):
    # maximum transmission is (1 + gamma)/2, so the input is 2 N0 / (1 + gamma)
    cfg = _full_transmission(SchemeConfig(pulse_100fs, tau=100 * AS, theta=0.0))
    N0 = 1e6
    direct = input_state_overlap(cfg.replace(n_photons=2 * N0 / (1 + cfg.gamma)))
    assert saturated_overlap(cfg, N0).exponent == pytest.approx(direct.exponent, rel=1e-12)


def test_saturated_full_transmission_matches_unprojected(budget_cfg):
    cfg = _full_transmission(budget_cfg)
    N0 = 1e6
    assert saturated_overlap(cfg, N0).overlap_sq == pytest.approx(
        input_state_overlap(cfg.replace(n_photons=N0)).overlap_sq, rel=1e-12)


def test_saturated_monotone_in_transmission(pulse_100fs):
    base = SchemeConfig(pulse_100fs, tau=100 * AS, theta=0.0)
    # walk phi from 0 to pi: transmission falls monotonically
    phis = np.linspace(0, math.pi, 200)
    cfgs = [base.replace(theta=base.carrier_phase - math.pi / 2 - phi) for phi in phis]
    t = [port_transmission(c) for c in cfgs]
    s = [saturated_overlap(c, 1e6).overlap_sq for c in cfgs]
    assert all(b < a for a, b in zip(t, t[1:]))
    assert all(b <= a for a, b in zip(s, s[1:]))


def test_budget_solver_reference(budget_cfg):
    roots = solve_projection_for_budget(budget_cfg, 1e7, 1e6)
    assert len(roots) == 2 and roots == sorted(roots)
    assert any(abs(math.degrees(r) - 53.2) < 0.1 for r in roots)
    assert math.degrees(roots[0]) == pytest.approx(53.20210235420893, abs=1e-9)
    for r in roots:
        assert abs(port_transmission(budget_cfg.replace(theta=r)) - 0.1) < 1e-12


def test_budget_solver_full_transmission_root(budget_cfg):
    roots = solve_projection_for_budget(budget_cfg, 1e6, 1e6)
    expected = (budget_cfg.carrier_phase - math.pi / 2) % (2 * math.pi)
    assert len(roots) == 2
    for r in roots:
        assert abs(math.remainder(r - expected, 2 * math.pi)) < 1e-5


def test_budget_solver_half(pulse_100fs):
    cfg = SchemeConfig(pulse_100fs, tau=100 * AS, theta=0.0)
    roots = solve_projection_for_budget(cfg, 2e6, 1e6)
    big_gammas = sorted((r + math.pi / 2 - cfg.carrier_phase) % (2 * math.pi) for r in roots)
    assert big_gammas[0] == pytest.approx(math.pi / 2, abs=1e-6)
    assert big_gammas[1] == pytest.approx(3 * math.pi / 2, abs=1e-6)


def test_budget_solver_no_solution(pulse_100fs):
    cfg = SchemeConfig(pulse_100fs, tau=1 * FS, theta=0.0)
    with pytest.raises(NoSolutionError) as info:
        solve_projection_for_budget(cfg, 1e12, 1.0)
    lo, hi = info.value.interval
    assert lo == pytest.approx(0.5 * cfg.one_minus_gamma)
    assert hi == pytest.approx(1 - 0.5 * cfg.one_minus_gamma)
    with pytest.raises(InvalidParameterError):
        solve_projection_for_budget(cfg, 1.0, 2.0)


@settings(max_examples=80, deadline=None)
@given(T0=st.floats(50 * FS, 2e-12), tau=st.floats(1 * AS, 10 * FS), ratio=st.floats(0.0, 1.0))
def test_budget_roots_reproduce_target(T0, tau, ratio):
    cfg = SchemeConfig(make_pulse(1.5e-6, T0), tau=tau, theta=0.0)
    lo, hi = 0.5 * cfg.one_minus_gamma, 1 - 0.5 * cfg.one_minus_gamma
    target = lo + ratio * (hi - lo)
    assume(target > 0)
    N_in = 1e9
    roots = solve_projection_for_budget(cfg, N_in, target * N_in)
    t = (target * N_in) / N_in
    for r in roots:
        assert 0 <= r < 2 * math.pi
        assert abs(port_transmission(cfg.replace(theta=r)) - t) < 1e-12
    # mirror pair about Gamma = omega0 tau
    mirror = roots[0] + roots[1] - 2 * (cfg.carrier_phase - math.pi / 2)
    assert abs(math.remainder(mirror, 2 * math.pi)) < 1e-6


def test_effective_overlap_values():
    assert effective_overlap(0.0, 0.9, 100) == 0.0
    assert effective_overlap(1.0, 0.9, 100) == 1.0
    assert effective_overlap(0.85, 0.9, 100) == pytest.approx(0.8504931941706789, rel=1e-13)
    assert effective_overlap(0.95, 0.9, 100) > 0.999
    assert abs(effective_overlap(0.5, 0.9, 100) - 0.5) < 1e-6
    with pytest.raises(InvalidParameterError):
        effective_overlap(1.1, 0.9, 100)
    with pytest.raises(InvalidParameterError):
        effective_overlap(0.5, 1.0, 100)


def test_effective_overlap_passthrough_needs_sharp_floor():
    # at n = 10 the floor still lifts rho = a/2 by ~5e-4; from n = 20 on it is below 1e-6
    assert effective_overlap(0.45, 0.9, 10) - 0.45 == pytest.approx(0.55 * -math.expm1(-0.5**10), rel=1e-9)
    assert effective_overlap(0.45, 0.9, 20) - 0.45 < 1e-6


@given(rho=st.floats(0, 1), a=st.floats(0.01, 0.99), n=st.integers(1, 200))
def test_effective_overlap_never_adds_distinguishability(rho, a, n):
    value = effective_overlap(rho, a, n)
    assert 0.0 <= value <= 1.0
    assert value >= rho - 1e-15


@given(frac=st.floats(0, 0.5), a=st.floats(0.01, 0.99), n=st.integers(20, 200))
def test_effective_overlap_passthrough_below_half_floor(frac, a, n):
    rho = frac * a
    assert effective_overlap(rho, a, n) - rho < 1e-6


def test_resolution_limited_error(pulse_100fs):
    base = SchemeConfig(pulse_100fs, tau=100 * AS, theta=0.0)
    Ns = np.logspace(0, 9, 40)
    assert all(resolution_limited_error(base, N, 0.9, 100) == 0.5 for N in Ns)
    resonant = base.replace(theta=math.radians(97.2))
    errors = [resolution_limited_error(resonant, N, 0.9, 100) for N in np.logspace(0, 6, 40)]
    assert all(b < a for a, b in zip(errors, errors[1:]))
    zero = SchemeConfig(pulse_100fs, tau=0.0, theta=1.0)
    assert resolution_limited_error(zero, 1e9, 0.9, 100) == 0.5
    with pytest.raises(InvalidParameterError):
        resolution_limited_error(base, -1.0, 0.9, 100)


def test_effective_overlap_far_above_floor_does_not_overflow():
    assert effective_overlap(0.99, 0.01, 200) == 1.0
