"""Tests for the sup-norm estimator, pointwise bounds, and proof profiles."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from schwarzlab import (
    BadParameter,
    FAlpha,
    GBeta,
    GridConfig,
    SeriesFunction,
    TaylorSeries,
    aux_maximizer_check,
    estimate_norm,
    extremal_f,
    extremal_g,
    g_profile,
    h_profile,
    pointwise_bound_f,
    pointwise_bound_g,
    schwarz_battery,
    schwarzian,
    series_members,
    subordination_members,
    weighted_profile,
)


def test_weighted_profile_identity_zero():
    f = SeriesFunction(TaylorSeries.identity(8))
    assert_allclose(weighted_profile(f, 0.5, 1.0), 0.0, atol=1e-14)


def test_weighted_profile_extremal_closed_form():
    # along theta = 0: 3 (1+r)^2 / 2 for beta = 1
    f = extremal_g(1.0)
    for r in (0.0, 0.3, 0.9, 0.99):
        assert_allclose(weighted_profile(f, r, 0.0), 1.5 * (1 + r) ** 2, rtol=1e-12)


def test_estimate_norm_identity():
    f = SeriesFunction(TaylorSeries.identity(8))
    rep = estimate_norm(f)
    assert rep.estimate < 1e-12
    assert not rep.extrapolated


def test_estimate_norm_extremal_g():
    for beta in (0.5, 1.0):
        bound = 2 * beta * (2 + beta)
        rep = estimate_norm(extremal_g(beta), spec=GBeta(beta))
        assert rep.estimate >= bound * (1 - 1e-3)
        assert rep.estimate <= bound + 1e-6
        assert rep.extrapolated
        assert rep.theoretical_bound == bound
        assert_allclose(rep.slack, bound - rep.estimate, rtol=1e-12)
        # the peak sits on the positive real axis
        assert min(rep.peak_theta % (2 * np.pi), 2 * np.pi - rep.peak_theta % (2 * np.pi)) < 0.1


def test_estimate_norm_is_deterministic():
    r1 = estimate_norm(extremal_g(1.0))
    r2 = estimate_norm(extremal_g(1.0))
    assert r1 == r2


def test_pointwise_bound_g_values():
    assert_allclose(pointwise_bound_g(1.0, 0.0), 1.5, rtol=1e-15)
    assert_allclose(pointwise_bound_g(2.0, 0.5), 16.0, rtol=1e-15)
    # at the origin the bound equals |S_f0(0)| = beta(2+beta)/2
    for beta in (0.5, 1.0, 3.0):
        assert_allclose(
            pointwise_bound_g(beta, 0.0),
            abs(schwarzian(extremal_g(beta), 0.0)),
            rtol=1e-13,
        )
    with pytest.raises(BadParameter):
        pointwise_bound_g(-1.0, 0.0)


def test_pointwise_bound_f_values():
    assert_allclose(pointwise_bound_f(0.0, 0.0), 2.0, rtol=1e-15)
    assert_allclose(pointwise_bound_f(-0.5, 0.0), 3.0, rtol=1e-15)
    assert_allclose(pointwise_bound_f(-0.5, np.sqrt(0.5)), 18.0, rtol=1e-14)
    with pytest.raises(BadParameter):
        pointwise_bound_f(0.2, 0.0)


def test_pointwise_bound_battery_small():
    rng = np.random.default_rng(33)
    omegas = schwarz_battery(rng, 6)
    grid = GridConfig.chebyshev(25, 20, 0.99).mesh()
    for spec, bound in ((GBeta(1.0), pointwise_bound_g(1.0, grid)),
                        (FAlpha(-0.5), pointwise_bound_f(-0.5, grid))):
        for f in series_members(spec, omegas, r_max=0.99):
            s = np.abs(schwarzian(f, grid))
            rel = np.min((bound - s) / bound)
            assert rel >= -1e-8


def test_norm_battery_small():
    rng = np.random.default_rng(34)
    omegas = schwarz_battery(rng, 6)
    for spec in (GBeta(0.5), FAlpha(-0.25)):
        bound = spec.norm_bound()
        for f in subordination_members(spec, omegas):
            rep = estimate_norm(f, spec=spec)
            assert rep.estimate <= bound + 1e-6


def test_extremal_f_pointwise_sharpness():
    for alpha in (-0.5, -0.25, 0.0):
        for z0 in (0.2, 0.5, 0.8):
            f = extremal_f(alpha, z0)
            got = (1 - z0**2) ** 2 * abs(schwarzian(f, complex(z0)))
            want = 2 * (1 - alpha) * (1 + alpha - alpha * z0**2) / (1 + alpha)
            assert abs(got - want) < 1e-7


def test_extremal_f_weighted_value_monotone_toward_limit():
    alpha = -0.5
    limit = 2 * (1 - alpha) / (1 + alpha)
    vals = []
    for z0 in (0.9, 0.99, 0.999):
        f = extremal_f(alpha, z0)
        vals.append((1 - z0**2) ** 2 * abs(schwarzian(f, complex(z0))))
    assert vals[0] < vals[1] < vals[2] < limit + 1e-9


def test_g_profile_endpoint_matches_pointwise_bound():
    # beta * g(|z|) must equal the displayed pointwise bound
    for beta in (0.5, 1.0, 2.0):
        for a in (0.2, 0.5, 0.8):
            assert_allclose(
                beta * g_profile(beta, a, a),
                pointwise_bound_g(beta, a),
                rtol=1e-13,
            )


def test_h_profile_at_maximizer_matches_pointwise_bound():
    for alpha in (-0.5, -0.25):
        for a in (0.3, 0.6):
            s_star = a * a / (1 + alpha - alpha * a * a)
            assert_allclose(
                h_profile(alpha, a, s_star),
                pointwise_bound_f(alpha, a),
                rtol=1e-13,
            )


def test_aux_maximizer_examples():
    rep = aux_maximizer_check(GBeta(1.0), 0.5)
    assert rep.s_star == 0.5
    assert abs(rep.numeric_argmax - 0.5) < 1e-6
    rep = aux_maximizer_check(FAlpha(-0.5), 0.5)
    assert_allclose(rep.s_star, 0.4, rtol=1e-15)
    assert abs(rep.numeric_argmax - 0.4) < 1e-6
    # alpha = 0: maximizer is |z|^2
    for a in (0.3, 0.7):
        rep = aux_maximizer_check(FAlpha(0.0), a)
        assert_allclose(rep.s_star, a * a, rtol=1e-15)
        assert abs(rep.numeric_argmax - a * a) < 1e-6


def test_aux_maximizer_validation():
    with pytest.raises(BadParameter):
        aux_maximizer_check(GBeta(1.0), 1.5)
