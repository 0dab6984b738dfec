"""Hyperbolic geometry of the unit disk and the derivative variability check.

The pseudo-hyperbolic distance rho(z1, z2) = |(z1 - z2)/(1 - conj(z1) z2)|
and the hyperbolic distance lambda = (1/2) log((1+rho)/(1-rho)) = artanh(rho)
are the metrics every bound downstream is phrased in.  ``dieudonne_check``
verifies the classical variability region of omega'(z0) for Schwarz
functions,

    |omega'(z0) - omega(z0)/z0| <= (|z0|^2 - |omega(z0)|^2) / (|z0| (1 - |z0|^2)),

with equality exactly for degree-2 Blaschke products fixing 0.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, CenterPoint, OutsideDisk


@dataclass(frozen=True, eq=False)
class GridConfig:
    """Polar sampling grid: ``angles`` equispaced angles x sorted ``radii``."""

    radii: np.ndarray
    angles: int
    r_max: float

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=float)
        object.__setattr__(self, "radii", r)
        if r.ndim != 1 or len(r) == 0:
            raise BadParameter("radii must be a nonempty 1-d sequence")
        if np.any(np.diff(r) < 0):
            raise BadParameter("radii must be sorted ascending")
        if r[0] < 0 or r[-1] >= 1:
            raise BadParameter("radii must lie in [0, 1)")
        if self.r_max != r[-1]:
            raise BadParameter("r_max must equal max(radii)")
        if self.angles < 1:
            raise BadParameter("need at least one angle")

    @classmethod
    def chebyshev(cls, n_radii=60, n_angles=60, r_max=0.99):
        """Radii clustered toward ``r_max`` (sine spacing), ending exactly there."""
        k = np.arange(1, n_radii + 1)
        radii = r_max * np.sin(0.5 * np.pi * k / n_radii)
        return cls(radii=radii, angles=n_angles, r_max=r_max)

    def thetas(self):
        return 2.0 * np.pi * np.arange(self.angles) / self.angles

    def mesh(self):
        """Complex points z[i, j] = radii[i] * exp(1j * theta[j])."""
        return self.radii[:, None] * np.exp(1j * self.thetas())[None, :]


def _require_disk(*points):
    for p in points:
        if np.any(np.abs(p) >= 1.0):
            raise OutsideDisk("point outside the open unit disk")


def pseudo_hyperbolic(z1, z2):
    """rho(z1, z2) = |(z1 - z2)/(1 - conj(z1) z2)|, a value in [0, 1)."""
    _require_disk(z1, z2)
    return np.abs((z1 - z2) / (1.0 - np.conj(z1) * z2))


def hyperbolic_distance(z1, z2):
    """lambda(z1, z2) = (1/2) log((1+rho)/(1-rho)) = artanh(rho)."""
    return np.arctanh(pseudo_hyperbolic(z1, z2))


def blaschke_eval(zeros, theta, z):
    """e^{i theta} prod_j (z - z_j)/(1 - conj(z_j) z); modulus < 1 on the disk."""
    zeros = np.asarray(zeros, dtype=np.complex128)
    if np.any(np.abs(zeros) >= 1.0):
        raise OutsideDisk("Blaschke zeros must lie inside the disk")
    _require_disk(z)
    acc = np.full(np.shape(z), complex(np.cos(theta), np.sin(theta)), dtype=np.complex128)
    for a in zeros:
        acc = acc * (z - a) / (1.0 - np.conj(a) * z)
    return acc if np.ndim(z) else acc[()]


@dataclass(frozen=True)
class DieudonneReport:
    """lhs <= rhs is the variability-region inequality; slack = rhs - lhs."""

    lhs: float
    rhs: float
    slack: float


def dieudonne_check(omega, z0):
    """Evaluate both sides of the omega'(z0) variability inequality.

    ``omega`` is any Schwarz-function object exposing ``u`` (= omega(z)/z)
    and ``u_prime``; the left side is computed as |z0 u'(z0)|, which equals
    |omega'(z0) - omega(z0)/z0| identically and avoids the cancellation that
    would otherwise dominate the equality cases.
    """
    z0 = complex(z0)
    if z0 == 0:
        raise CenterPoint("the variability region is stated for z0 != 0")
    if abs(z0) >= 1.0:
        raise OutsideDisk("z0 must lie inside the disk")
    w = z0 * omega.u(z0)  # omega(z0)
    lhs = abs(z0 * omega.u_prime(z0))
    r2 = abs(z0) ** 2
    rhs = (r2 - abs(w) ** 2) / (abs(z0) * (1.0 - r2))
    return DieudonneReport(lhs=float(lhs), rhs=float(rhs), slack=float(rhs - lhs))
