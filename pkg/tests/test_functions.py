"""Tests for the jet engine, Schwarzian, and the finite-difference oracle."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from schwarzlab import (
    BadParameter,
    ExtremalG,
    MobiusFunction,
    OutsideDisk,
    PostComposed,
    SeriesFunction,
    StencilOutsideDisk,
    TaylorSeries,
    VanishingDerivative,
    jet,
    pre_schwarzian,
    random_mobius,
    schwarz_battery,
    schwarzian,
    schwarzian_fd_oracle,
    subordination_members,
)
from schwarzlab.families import FAlpha, GBeta


def identity_fn(order=8):
    return SeriesFunction(TaylorSeries.identity(order))


def koebe(order=2048):
    """z/(1-z)^2 = sum n z^n."""
    c = np.arange(order + 1, dtype=complex)
    return SeriesFunction(TaylorSeries(c))


def disk_points(rng, n, r_cap=0.8):
    return [
        r_cap * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        for _ in range(n)
    ]


def test_jet_of_identity_series():
    j = jet(identity_fn(), 0.3)
    assert_allclose([j.f, j.f1, j.f2, j.f3], [0.3, 1.0, 0.0, 0.0], atol=1e-15)


def test_jet_of_extremal_g1_at_zero():
    # f0(z) = z - z^2/2 for beta = 1
    j = jet(ExtremalG(1.0), 0.0)
    assert_allclose([j.f, j.f1, j.f2, j.f3], [0.0, 1.0, -1.0, 0.0], atol=1e-15)


def test_jet_of_mobius_geometric():
    j = jet(MobiusFunction(1, 0, -1, 1), 0.0)  # z/(1-z)
    assert_allclose([j.f, j.f1, j.f2, j.f3], [0.0, 1.0, 2.0, 6.0], atol=1e-15)


def test_jet_outside_disk():
    with pytest.raises(OutsideDisk):
        jet(identity_fn(), 1.2)


def test_mobius_degenerate_rejected():
    with pytest.raises(BadParameter):
        MobiusFunction(1, 2, 2, 4)


def test_series_function_requires_normalization():
    with pytest.raises(BadParameter):
        SeriesFunction(TaylorSeries([0.5, 1, 0, 0]))
    with pytest.raises(BadParameter):
        SeriesFunction(TaylorSeries([0, 2, 0, 0]))


def test_pre_schwarzian_examples():
    assert abs(pre_schwarzian(identity_fn(), 0.4)) < 1e-14
    # extremal family: f''/f' = -beta/(1-z)
    for beta in (0.5, 1.0, 2.0):
        for z in (0.0, 0.3, -0.5, 0.2 + 0.4j):
            got = pre_schwarzian(ExtremalG(beta), z)
            assert_allclose(got, -beta / (1 - z), rtol=1e-13)
    assert_allclose(pre_schwarzian(MobiusFunction(1, 0, -1, 1), 0.0), 2.0, rtol=1e-14)


def test_extremal_g_preschwarzian_identity():
    rng = np.random.default_rng(2)
    for beta in (0.25, 1.0, 3.0):
        f = ExtremalG(beta)
        for z in disk_points(rng, 25):
            assert abs(pre_schwarzian(f, z) * (1 - z) + beta) < 1e-12


def test_schwarzian_closed_forms():
    assert abs(schwarzian(identity_fn(), 0.2)) < 1e-14
    assert_allclose(schwarzian(ExtremalG(1.0), 0.0), -1.5, rtol=1e-14)
    # S_{f0}(z) = -beta(2+beta)/(2(1-z)^2)
    for beta in (0.5, 1.0, 2.0):
        for z in (0.1, -0.4, 0.3 + 0.3j):
            want = -beta * (2 + beta) / (2 * (1 - z) ** 2)
            assert_allclose(schwarzian(ExtremalG(beta), z), want, rtol=1e-12)


def test_mobius_schwarzian_vanishes():
    rng = np.random.default_rng(4)
    for _ in range(20):
        m = random_mobius(rng, c_scale=0.3)
        for z in disk_points(rng, 10):
            assert abs(schwarzian(m, z)) < 1e-12


def test_koebe_schwarzian_at_zero():
    f = koebe()
    assert_allclose(schwarzian(f, 0.0), -6.0, atol=1e-10)
    # cross-check through the independent finite-difference oracle
    assert_allclose(schwarzian_fd_oracle(f, 0.0), -6.0, atol=1e-6)


def test_fd_oracle_examples():
    assert abs(schwarzian_fd_oracle(identity_fn(), 0.1)) < 1e-8
    got = schwarzian_fd_oracle(ExtremalG(1.0), 0.2)
    assert_allclose(got, -3 / (2 * 0.8**2), atol=1e-5)
    assert abs(schwarzian_fd_oracle(MobiusFunction(1, 0, -1, 1), 0.5j)) < 1e-7


def test_fd_oracle_stencil_check():
    with pytest.raises(StencilOutsideDisk):
        schwarzian_fd_oracle(identity_fn(), 0.999)


def test_fd_oracle_agrees_with_analytic_path_all_variants():
    rng = np.random.default_rng(6)
    omegas = schwarz_battery(rng, 3)
    variants = [
        identity_fn(64),
        ExtremalG(0.7),
        koebe(512),
        MobiusFunction(1.0, 0.1j, -0.5, 1.0),
        *subordination_members(GBeta(1.0), omegas),
        *subordination_members(FAlpha(-0.5), omegas),
    ]
    for f in variants:
        for z in disk_points(rng, 12):
            s_an = schwarzian(f, z)
            s_fd = schwarzian_fd_oracle(f, z)
            assert abs(s_an - s_fd) <= 1e-5 * max(1.0, abs(s_an))


def test_mobius_postcomposition_invariance():
    rng = np.random.default_rng(8)
    omegas = schwarz_battery(rng, 2)
    inners = [
        ExtremalG(1.0),
        koebe(512),
        *subordination_members(FAlpha(-0.25), omegas),
    ]
    for f in inners:
        pts = disk_points(rng, 25)
        m = max(abs(f.jet3(z).f) for z in pts)
        t = random_mobius(rng, c_scale=1.0 / (4.0 * (1.0 + m)))
        g = PostComposed(t, f)
        for z in pts:
            assert abs(schwarzian(g, z) - schwarzian(f, z)) < 1e-9


def test_schwarzian_continuity_smoke():
    f = ExtremalG(1.0)
    zs = np.linspace(0.2, 0.2 + 1e-2, 101)
    vals = schwarzian(f, zs)
    steps = np.abs(np.diff(vals))
    # |S'| <= 3/(1-r)^3 ~ 6 here; adjacent samples 1e-4 apart stay well inside
    assert np.max(steps) < 1e-2


def test_vanishing_derivative_detected():
    # f = z - z^2/2 + ... with f'(z) = (1-z)^2: derivative vanishes only at 1,
    # so force a synthetic series whose derivative dies inside the disk
    c = np.zeros(8, dtype=complex)
    c[1] = 1.0
    c[2] = -1.0  # f' = 1 - 2z vanishes at z = 0.5
    f = SeriesFunction(TaylorSeries(c))
    with pytest.raises(VanishingDerivative):
        jet(f, 0.5)
