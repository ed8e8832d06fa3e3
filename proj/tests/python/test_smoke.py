"""Smoke tests for the zenoptics python module."""

import math

import pytest

import zenoptics as zo


def test_zeno_ratio_values():
    assert zo.zeno_ratio(1) == 0.0
    assert zo.zeno_ratio(2) == pytest.approx(0.25, rel=1e-12)
    assert zo.zeno_ratio(4) == pytest.approx(0.5307900429449553, rel=1e-12)


def test_continuous_curve():
    cfg = zo.ZenoConfig()
    assert zo.continuous_intensity(cfg, 0.0) == 1.0
    assert zo.continuous_intensity(cfg, 1.0) == 0.0
    assert zo.continuous_intensity(cfg, 1.0 / 3.0) == pytest.approx(0.75, abs=1e-14)


def test_chain_propagation_matches_closed_form():
    chain = zo.build_measured_chain(8, zo.HALF_PI, 1.0, 1.0)
    out = zo.propagate(chain).output
    assert zo.intensity(out) == pytest.approx(zo.zeno_ratio(8), rel=1e-12)


def test_manual_chain():
    inp = zo.JonesVector.linear_polarized(2.0, zo.HALF_PI)
    chain = zo.ElementChain(
        [zo.FaradayRotator(zo.HALF_PI, 1.0), zo.LinearPolarizer(0.0, 0.0)],
        inp,
        "demo",
    )
    out = zo.propagate(chain).output
    assert zo.intensity(out) == pytest.approx(2.0, abs=1e-12)


def test_stokes_roundtrip():
    v = zo.JonesVector.linear_polarized(1.0, math.pi / 4)
    s = zo.stokes_from_jones(v)
    assert s.s0 == pytest.approx(1.0, abs=1e-15)
    assert s.s2 == pytest.approx(1.0, abs=1e-12)
    assert s.degree_of_polarization() == pytest.approx(1.0, abs=1e-12)


def test_monte_carlo_deterministic():
    cfg = zo.MonteCarloConfig()
    cfg.n = 4
    cfg.photons = 50_000
    cfg.seed = 123
    a = zo.mc_survival(cfg)
    b = zo.mc_survival(cfg)
    assert a.survivors == b.survivors
    assert a.mean == b.mean
    check = zo.mc_survival_exact_check(cfg)
    assert abs(check.z_score) < 6.0


def test_sweep_and_deficit():
    res = zo.zeno_sweep([1, 2, 4, 8])
    assert [row.n for row in res.rows] == [1, 2, 4, 8]
    ratios = [row.ratio for row in res.rows]
    assert ratios == sorted(ratios)
    assert zo.asymptotic_deficit(1024) == pytest.approx(
        math.pi**2 / 4, rel=2e-3
    )


def test_jitter_zero_sigma_is_exact():
    cfg = zo.JitterConfig()
    cfg.n = 16
    cfg.sigma = 0.0
    cfg.trials = 3
    res = zo.jittered_output(cfg)
    assert res.mean_ratio == zo.zeno_ratio(16)
    assert res.std_dev == 0.0


def test_validation_errors():
    cfg = zo.ZenoConfig()
    cfg.n = 0
    with pytest.raises(ValueError):
        zo.zeno_output(cfg)
    with pytest.raises(ValueError):
        zo.build_measured_chain(0, zo.HALF_PI, 1.0, 1.0)
