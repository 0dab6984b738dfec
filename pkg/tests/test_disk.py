"""Tests for disk geometry and the derivative variability check."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from schwarzlab import (
    BadParameter,
    BlaschkeProduct,
    CenterPoint,
    GridConfig,
    OutsideDisk,
    SchwarzSeries,
    TaylorSeries,
    blaschke_eval,
    degree2_battery,
    dieudonne_check,
    hyperbolic_distance,
    pseudo_hyperbolic,
    schwarz_battery,
)


def random_disk(rng, n, r_cap=0.9):
    return [
        r_cap * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        for _ in range(n)
    ]


def test_grid_config_validation():
    with pytest.raises(BadParameter):
        GridConfig(radii=np.array([0.5, 0.2]), angles=4, r_max=0.5)
    with pytest.raises(BadParameter):
        GridConfig(radii=np.array([0.2, 0.5]), angles=4, r_max=0.9)
    g = GridConfig.chebyshev(10, 8, 0.99)
    assert g.r_max == g.radii[-1] == 0.99
    assert g.mesh().shape == (10, 8)


def test_pseudo_hyperbolic_examples():
    for r in (0.1, 0.5, 0.9):
        assert_allclose(pseudo_hyperbolic(0.0, r), r, rtol=1e-15)
    assert pseudo_hyperbolic(0.3 + 0.2j, 0.3 + 0.2j) == 0.0
    assert_allclose(pseudo_hyperbolic(0.5, -0.5), 0.8, rtol=1e-15)
    with pytest.raises(OutsideDisk):
        pseudo_hyperbolic(1.0, 0.0)


def test_hyperbolic_distance_examples():
    assert hyperbolic_distance(0.0, 0.0) == 0.0
    assert_allclose(hyperbolic_distance(0.0, 0.5), 0.5 * np.log(3.0), rtol=1e-14)


def test_hyperbolic_distance_automorphism_invariance():
    rng = np.random.default_rng(21)
    for _ in range(30):
        a, z1, z2 = random_disk(rng, 3)
        s1 = (z1 - a) / (1 - np.conj(a) * z1)
        s2 = (z2 - a) / (1 - np.conj(a) * z2)
        assert abs(hyperbolic_distance(s1, s2) - hyperbolic_distance(z1, z2)) < 1e-12


def test_hyperbolic_distance_symmetry_and_triangle():
    rng = np.random.default_rng(22)
    for _ in range(40):
        z1, z2, z3 = random_disk(rng, 3)
        assert hyperbolic_distance(z1, z2) == hyperbolic_distance(z2, z1)
        lhs = hyperbolic_distance(z1, z3)
        rhs = hyperbolic_distance(z1, z2) + hyperbolic_distance(z2, z3)
        assert lhs <= rhs + 1e-12


def test_blaschke_eval_examples():
    zs = np.array([0.1, 0.5, -0.3 + 0.2j])
    assert_allclose(blaschke_eval([0.0], 0.0, zs), zs, rtol=1e-15)
    assert_allclose(blaschke_eval([0.0, 0.0], 0.0, 0.5), 0.25, rtol=1e-15)
    assert_allclose(blaschke_eval([0.0, 0.5], 0.0, 0.5), 0.0, atol=1e-15)


def test_blaschke_modulus_below_one():
    rng = np.random.default_rng(23)
    for _ in range(25):
        deg = int(rng.integers(1, 5))
        zeros = random_disk(rng, deg, r_cap=0.85)
        theta = float(rng.uniform(0, 2 * np.pi))
        for z in random_disk(rng, 40, r_cap=0.98):
            assert abs(blaschke_eval(zeros, theta, z)) < 1.0


def test_dieudonne_identity_omega():
    om = SchwarzSeries(TaylorSeries.identity(8))
    rep = dieudonne_check(om, 0.4)
    assert_allclose([rep.lhs, rep.rhs, rep.slack], [0.0, 0.0, 0.0], atol=1e-15)


def test_dieudonne_equality_for_z_squared():
    om = SchwarzSeries(TaylorSeries([0, 0, 1]).pad(8))
    rep = dieudonne_check(om, 0.5)
    assert_allclose(rep.lhs, 0.5, rtol=1e-14)
    assert_allclose(rep.rhs, 0.5, rtol=1e-14)
    assert abs(rep.slack) < 1e-14


def test_dieudonne_strict_for_z_cubed():
    om = SchwarzSeries(TaylorSeries([0, 0, 0, 1]).pad(8))
    rep = dieudonne_check(om, 0.5)
    assert_allclose(rep.lhs, 0.5, rtol=1e-14)
    assert_allclose(rep.rhs, 0.625, rtol=1e-14)
    assert rep.slack > 0.1


def test_dieudonne_center_point_rejected():
    om = SchwarzSeries(TaylorSeries.identity(4))
    with pytest.raises(CenterPoint):
        dieudonne_check(om, 0.0)


def test_dieudonne_random_battery_slack_nonnegative():
    rng = np.random.default_rng(24)
    omegas = schwarz_battery(rng, 60)
    z0s = random_disk(rng, 20, r_cap=0.95)
    worst = min(dieudonne_check(om, z0).slack for om in omegas for z0 in z0s)
    assert worst >= -1e-10


def test_dieudonne_equality_case_degree_two():
    rng = np.random.default_rng(25)
    z0s = random_disk(rng, 20, r_cap=0.95)
    for om in degree2_battery(rng, 40):
        for z0 in z0s:
            assert abs(dieudonne_check(om, z0).slack) < 1e-9


def test_extremal_f_omega_saturates_at_any_point():
    # zeros {0, b} with rotation pi is a degree-2 product fixing 0
    from schwarzlab import b_param

    for alpha, z0 in ((-0.5, 0.5), (0.0, 0.3), (-0.25, -0.6)):
        b = b_param(alpha, z0)
        om = BlaschkeProduct((0.0, b), rotation=np.pi)
        rep = dieudonne_check(om, complex(z0))
        assert abs(rep.slack) < 1e-9
