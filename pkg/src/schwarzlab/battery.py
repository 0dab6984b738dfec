"""Seeded random batteries for verification runs and property tests.

Conventions (kept deterministic so reports are reproducible):

* random Schwarz functions are a 50/50 mix of Blaschke products of degree
  <= 4 with a zero at the origin (other zeros uniform in the 0.85-disk) and
  series of the form z * (polynomial scaled to sup-modulus 0.9), so every
  series member is strictly bounded away from |omega| = 1;
* point pairs for the distortion bounds are drawn uniformly in polar
  coordinates with r <= 0.95, rejecting pairs with pseudo-hyperbolic
  distance above 0.999 to keep sinh arguments sane.
"""

import numpy as np

from .disk import pseudo_hyperbolic
from .families import (
    BlaschkeProduct,
    SchwarzSeries,
    SubordinationFunction,
    build_from_schwarz,
    order_for_radius,
)
from .functions import MobiusFunction
from .series import TaylorSeries


def _disk_point(rng, r_max):
    r = r_max * np.sqrt(rng.random())
    phi = 2.0 * np.pi * rng.random()
    return r * complex(np.cos(phi), np.sin(phi))


def random_blaschke(rng, max_degree=4):
    """Blaschke product of degree 1..max_degree with a zero at the origin."""
    degree = int(rng.integers(1, max_degree + 1))
    zeros = [0.0] + [_disk_point(rng, 0.85) for _ in range(degree - 1)]
    return BlaschkeProduct(zeros, rotation=float(rng.uniform(0.0, 2.0 * np.pi)))


def random_schwarz_series(rng, max_degree=8):
    """omega(z) = 0.9 z p(z) / sup_{|z|=1} |p|, a strictly bounded polynomial."""
    degree = int(rng.integers(1, max_degree + 1))
    coeffs = rng.standard_normal(degree) + 1j * rng.standard_normal(degree)
    angles = np.exp(2j * np.pi * np.arange(512) / 512)
    sup = float(np.max(np.abs(np.polynomial.polynomial.polyval(angles, coeffs))))
    scaled = 0.9 * coeffs / sup
    return SchwarzSeries(TaylorSeries(np.concatenate([[0.0], scaled])))


def random_schwarz(rng):
    if rng.random() < 0.5:
        return random_blaschke(rng)
    return random_schwarz_series(rng)


def schwarz_battery(rng, n):
    return [random_schwarz(rng) for _ in range(n)]


def degree2_battery(rng, n):
    """Degree-2 Blaschke products fixing 0: the variability equality cases."""
    out = []
    for _ in range(n):
        zeros = (0.0, _disk_point(rng, 0.85))
        out.append(BlaschkeProduct(zeros, rotation=float(rng.uniform(0.0, 2.0 * np.pi))))
    return out


def random_mobius(rng, c_scale=1.0):
    """Nondegenerate Mobius map with moderate coefficients."""
    while True:
        a = 1.0 + 0.5 * (rng.standard_normal() + 1j * rng.standard_normal())
        b = 0.5 * (rng.standard_normal() + 1j * rng.standard_normal())
        c = c_scale * 0.5 * (rng.standard_normal() + 1j * rng.standard_normal())
        d = 1.0 + 0.2 * (rng.standard_normal() + 1j * rng.standard_normal())
        if abs(a * d - b * c) > 0.1:
            return MobiusFunction(a, b, c, d)


def random_pairs(rng, n, r_cap=0.95, rho_cap=0.999):
    """Distinct disk point pairs, polar-uniform, with rho below ``rho_cap``."""
    pairs = []
    while len(pairs) < n:
        z1 = _disk_point(rng, r_cap)
        z2 = _disk_point(rng, r_cap)
        if z1 == z2:
            continue
        if float(pseudo_hyperbolic(z1, z2)) > rho_cap:
            continue
        pairs.append((z1, z2))
    return pairs


def series_members(spec, omegas, r_max=0.99):
    """build_from_schwarz members at an order adequate for radius ``r_max``."""
    order = order_for_radius(r_max)
    return [build_from_schwarz(spec, om, order) for om in omegas]


def subordination_members(spec, omegas, order=None):
    """SubordinationFunction members (exact derivative ratios at any radius)."""
    if order is None:
        return [SubordinationFunction(spec, om) for om in omegas]
    return [SubordinationFunction(spec, om, order) for om in omegas]
