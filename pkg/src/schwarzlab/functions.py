"""Normalized analytic functions on the disk and their Schwarzian derivative.

Every function variant knows how to produce the 3-jet (value and first three
derivatives) at points of the disk; the pre-Schwarzian f''/f' and the
Schwarzian

    S_f = (f''/f')' - (1/2) (f''/f')^2  =  f'''/f' - (3/2) (f''/f')^2

are computed from that jet.  The algebraic form on the right is used
throughout: it is one identity instead of an extra numerical
differentiation, with fewer cancellation sites.

Evaluation is vectorized: ``z`` may be a complex scalar or an ndarray.
"""

from typing import NamedTuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (
    BadParameter,
    OutsideDisk,
    StencilOutsideDisk,
    VanishingDerivative,
)
from .series import TaylorSeries

#: |f'| below this is treated as a vanishing derivative.  Local univalence of
#: the class members is a theorem, so a hit indicates bad user input.
VANISHING_TOL = 1e-14


class Jet3(NamedTuple):
    """Value and first three derivatives of f at a point (or point array)."""

    f: complex
    f1: complex
    f2: complex
    f3: complex


class AnalyticFunction:
    """Base for all function variants; subclasses implement :meth:`jet3`."""

    def jet3(self, z):
        raise NotImplementedError

    def label(self):
        return type(self).__name__


class ExtremalG(AnalyticFunction):
    """f0(z) = (1 - (1-z)**(1+beta)) / (1+beta), evaluated in closed form.

    This is the function saturating the sharp pointwise and norm bounds of
    the class with Re(1 + z f''/f') < 1 + beta/2; it has
    f0' = (1-z)**beta and pre-Schwarzian -beta/(1-z).
    """

    def __init__(self, beta):
        if not beta > 0:
            raise BadParameter(f"beta must be positive, got {beta}")
        self.beta = float(beta)

    def jet3(self, z):
        b = self.beta
        w = 1.0 - np.asarray(z, dtype=np.complex128)
        wb = w**b  # principal branch; Re(1-z) > 0 on the disk
        f = (1.0 - w * wb) / (1.0 + b)
        f1 = wb
        f2 = -b * wb / w
        f3 = b * (b - 1.0) * wb / (w * w)
        return Jet3(f, f1, f2, f3)

    def label(self):
        return f"extremal-g:{self.beta:g}"


class SeriesFunction(AnalyticFunction):
    """A function given directly by its Taylor coefficients.

    Enforces the normalization f(0) = 0, f'(0) = 1 shared by all class
    members.  Jets are Horner evaluations of the formal derivatives; the
    caller owns the truncation error (see ``TaylorSeries.tail_indicator``).
    """

    def __init__(self, series):
        if not isinstance(series, TaylorSeries):
            series = TaylorSeries(series)
        if series.order < 3:
            raise BadParameter("need order >= 3 to form third-derivative jets")
        if abs(series.c[0]) > 1e-9 or abs(series.c[1] - 1.0) > 1e-9:
            raise BadParameter("series is not normalized: f(0)=0, f'(0)=1 required")
        self.series = series
        d1 = npoly.polyder(series.c)
        d2 = npoly.polyder(d1)
        d3 = npoly.polyder(d2)
        self._derivs = (series.c, d1, d2, d3)

    def jet3(self, z):
        c0, c1, c2, c3 = self._derivs
        return Jet3(
            npoly.polyval(z, c0),
            npoly.polyval(z, c1),
            npoly.polyval(z, c2),
            npoly.polyval(z, c3),
        )

    def label(self):
        return f"series(order={self.series.order})"


class MobiusFunction(AnalyticFunction):
    """T(z) = (az + b)/(cz + d) with ad - bc != 0.  Testing aid.

    Not normalized; its Schwarzian vanishes identically, which is the
    classical degeneracy the engine must reproduce at roundoff level.
    """

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        scale = max(abs(a), abs(b), abs(c), abs(d), 1.0)
        if abs(det) <= 1e-14 * scale * scale:
            raise BadParameter("Mobius map is degenerate (ad - bc = 0)")
        self.a, self.b, self.c, self.d = (complex(v) for v in (a, b, c, d))
        self.det = complex(det)

    def jet3(self, z):
        den = self.c * np.asarray(z, dtype=np.complex128) + self.d
        f = (self.a * z + self.b) / den
        f1 = self.det / den**2
        f2 = -2.0 * self.c * self.det / den**3
        f3 = 6.0 * self.c**2 * self.det / den**4
        return Jet3(f, f1, f2, f3)

    def label(self):
        return "mobius"


class PostComposed(AnalyticFunction):
    """T o f for a Mobius T and an arbitrary inner function.  Testing aid."""

    def __init__(self, mobius, inner):
        if not isinstance(mobius, MobiusFunction):
            raise BadParameter("outer map must be a MobiusFunction")
        self.mobius = mobius
        self.inner = inner

    def jet3(self, z):
        ji = self.inner.jet3(z)
        jt = self.mobius.jet3(ji.f)  # Mobius jets are valid at any point
        g = jt.f
        g1 = jt.f1 * ji.f1
        g2 = jt.f2 * ji.f1**2 + jt.f1 * ji.f2
        g3 = jt.f3 * ji.f1**3 + 3.0 * jt.f2 * ji.f1 * ji.f2 + jt.f1 * ji.f3
        return Jet3(g, g1, g2, g3)

    def label(self):
        return f"mobius o {self.inner.label()}"


# ----------------------------------------------------------------------
# jet access and the Schwarzian
# ----------------------------------------------------------------------

def jet(f, z):
    """Validated 3-jet of ``f`` at ``z`` (scalar or array of disk points)."""
    if np.any(np.abs(z) >= 1.0):
        raise OutsideDisk("jet requires |z| < 1")
    j = f.jet3(z)
    if np.min(np.abs(j.f1)) < VANISHING_TOL:
        raise VanishingDerivative("f'(z) vanishes at an evaluation point")
    return j


def pre_schwarzian(f, z):
    """f''(z)/f'(z)."""
    j = jet(f, z)
    return j.f2 / j.f1


def schwarzian(f, z):
    """S_f(z) = f'''/f' - (3/2)(f''/f')^2."""
    j = jet(f, z)
    q = j.f2 / j.f1
    return j.f3 / j.f1 - 1.5 * q * q


# 6th-order central first/second derivative stencils and the 4th-order
# 7-point third-derivative stencil, offsets -3h .. 3h.
_W1 = np.array([-1 / 60, 3 / 20, -3 / 4, 0.0, 3 / 4, -3 / 20, 1 / 60])
_W2 = np.array([1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90])
_W3 = np.array([1 / 8, -1.0, 13 / 8, 0.0, -13 / 8, 1.0, -1 / 8])


def schwarzian_fd_oracle(f, z, h=1e-3):
    """S_f(z) from central finite differences of f values alone.

    A 7-point stencil of real spacing ``h`` feeds 6th-order first/second and
    4th-order third derivative formulas, so the truncation error on these
    analytic functions is O(h^4).  Used only as an independent check of the
    analytic jet path.
    """
    z = complex(z)
    if abs(z) + 3.0 * h >= 1.0:
        raise StencilOutsideDisk("stencil of spacing h leaves the disk")
    if hasattr(f, "ensure_accuracy"):
        f.ensure_accuracy(abs(z) + 3.0 * h)
    vals = np.array([f.jet3(z + j * h).f for j in range(-3, 4)])
    f1 = np.dot(_W1, vals) / h
    f2 = np.dot(_W2, vals) / h**2
    f3 = np.dot(_W3, vals) / h**3
    if abs(f1) < VANISHING_TOL:
        raise VanishingDerivative("finite-difference f'(z) vanishes")
    q = f2 / f1
    return f3 / f1 - 1.5 * q * q
