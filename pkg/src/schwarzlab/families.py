"""The two function families and their subordination machinery.

``GBeta(beta)`` is the family with Re(1 + z f''/f') < 1 + beta/2 (beta > 0),
``FAlpha(alpha)`` the family with Re(1 + z f''/f') > alpha (-1/2 <= alpha <= 0;
alpha = 0 is the convex class).  Membership is equivalent to the
subordination of 1 + z f''/f' to a Mobius half-plane target, i.e. to the
existence of a Schwarz function omega with

    f''/f' = prefactor * omega(z) / (z (1 - omega(z))),

where prefactor is -beta for GBeta and 2(1-alpha) for FAlpha.  That ODE is
what ``build_from_schwarz`` integrates: P = f''/f' as a series (the z in the
denominator cancels against omega(0) = 0), then f' = exp(int P) and
f = int f', automatically normalized.

``SubordinationFunction`` wraps the same construction but keeps omega
around: the derivative ratios f''/f' = P and f'''/f' = P' + P^2 are then
evaluated from omega and omega' in closed form, with

    P  = c u / (1 - omega),          u = omega(z)/z,
    P' = c (u' + u^2) / (1 - omega)^2,

so its Schwarzian carries no series-truncation error at any radius.  The
truncated series only supplies the f and f' *values* (used by the distortion
functional); ``ensure_accuracy`` rebuilds it at an order adequate for a
requested radius.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import BadParameter, NonvanishingAtZero, OutsideDisk
from .functions import AnalyticFunction, Jet3, SeriesFunction, pre_schwarzian
from .series import DEFAULT_ORDER, TaylorSeries

#: Hard cap on automatic series-order raising.
MAX_ORDER = 24576


def order_for_radius(r, base=DEFAULT_ORDER, cap=MAX_ORDER):
    """Series order whose geometric tail at radius ``r`` is below ~1e-40.

    92 ~ 40 log(10), so r**order < 1e-40 whenever order >= 92/(1-r); this
    over-provisions enough to absorb the n^3 amplification involved in
    evaluating third derivatives of the series near its boundary.
    """
    if not 0.0 <= r < 1.0:
        raise OutsideDisk("radius must lie in [0, 1)")
    need = int(np.ceil(92.0 / max(1.0 - r, 1e-12)))
    return int(min(max(need, base), cap))


# ----------------------------------------------------------------------
# class specifications
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GBeta:
    """Re(1 + z f''/f') < 1 + beta/2 on the disk, beta > 0."""

    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise BadParameter(f"beta must be positive, got {self.beta}")

    @property
    def prefactor(self):
        return -self.beta

    def norm_bound(self):
        """Sharp bound on the hyperbolic sup-norm of the Schwarzian: 2 beta (2+beta)."""
        return 2.0 * self.beta * (2.0 + self.beta)

    def target(self, w):
        """Half-plane target of the subordination: (1 - (1+beta) w)/(1 - w)."""
        return (1.0 - (1.0 + self.beta) * w) / (1.0 - w)

    def margin(self, q):
        """Distance of Re q below the defining bound 1 + beta/2."""
        return (1.0 + self.beta / 2.0) - np.real(q)

    def label(self):
        return f"g:{self.beta:g}"


@dataclass(frozen=True)
class FAlpha:
    """Re(1 + z f''/f') > alpha on the disk, -1/2 <= alpha <= 0."""

    alpha: float

    def __post_init__(self):
        if not -0.5 <= self.alpha <= 0.0:
            raise BadParameter(f"alpha must lie in [-1/2, 0], got {self.alpha}")

    @property
    def prefactor(self):
        return 2.0 * (1.0 - self.alpha)

    def norm_bound(self):
        """Sharp bound on the hyperbolic sup-norm: 2(1-alpha)/(1+alpha)."""
        return 2.0 * (1.0 - self.alpha) / (1.0 + self.alpha)

    def target(self, w):
        """Half-plane target of the subordination: (1 + (1-2 alpha) w)/(1 - w)."""
        return (1.0 + (1.0 - 2.0 * self.alpha) * w) / (1.0 - w)

    def margin(self, q):
        """Distance of Re q above the defining bound alpha."""
        return np.real(q) - self.alpha

    def label(self):
        return f"f:{self.alpha:g}"


#: Either family specification.
ClassSpec = GBeta | FAlpha


def halfplane_target(spec):
    """The Mobius target map of the subordination defining ``spec``."""
    return spec.target


# ----------------------------------------------------------------------
# Schwarz functions
# ----------------------------------------------------------------------

class SchwarzFunction:
    """Analytic omega: D -> D with omega(0) = 0.

    Subclasses expose the shifted function u(z) = omega(z)/z and its
    derivative in closed form; omega and omega' follow from

        omega = z u,    omega' = u + z u'.
    """

    def u(self, z):
        raise NotImplementedError

    def u_prime(self, z):
        raise NotImplementedError

    def omega(self, z):
        return z * self.u(z)

    def omega_prime(self, z):
        return self.u(z) + z * self.u_prime(z)

    def __call__(self, z):
        return self.omega(z)

    def as_series(self, order):
        raise NotImplementedError

    def label(self):
        return type(self).__name__


class BlaschkeProduct(SchwarzFunction):
    """Finite Blaschke product e^{i theta} prod (z - z_j)/(1 - conj(z_j) z).

    At least one zero must sit at the origin so that omega(0) = 0; that
    factor is plain z and cancels exactly in u = omega/z.
    """

    def __init__(self, zeros, rotation=0.0):
        zeros = tuple(complex(a) for a in zeros)
        if not zeros:
            raise BadParameter("a Blaschke product needs at least one zero")
        if any(abs(a) >= 1.0 for a in zeros):
            raise BadParameter("Blaschke zeros must lie inside the disk")
        if 0j not in zeros:
            raise BadParameter("need a zero at the origin for omega(0) = 0")
        self.zeros = zeros
        self.rotation = float(rotation)
        self.phase = complex(np.cos(self.rotation), np.sin(self.rotation))
        rest = list(zeros)
        rest.remove(0j)
        self._rest = tuple(rest)

    @property
    def degree(self):
        return len(self.zeros)

    def _factors(self, z):
        fs, dfs = [], []
        for a in self._rest:
            den = 1.0 - np.conj(a) * z
            fs.append((z - a) / den)
            dfs.append((1.0 - abs(a) ** 2) / (den * den))
        return fs, dfs

    def u(self, z):
        zz = np.asarray(z, dtype=np.complex128)
        acc = np.full(zz.shape, self.phase, dtype=np.complex128)
        for a in self._rest:
            acc = acc * (zz - a) / (1.0 - np.conj(a) * zz)
        return acc if zz.shape else acc[()]

    def u_prime(self, z):
        zz = np.asarray(z, dtype=np.complex128)
        fs, dfs = self._factors(zz)
        acc = np.zeros(zz.shape, dtype=np.complex128)
        for j in range(len(fs)):
            term = dfs[j]
            for k in range(len(fs)):
                if k != j:
                    term = term * fs[k]
            acc = acc + term
        acc = self.phase * acc
        return acc if zz.shape else acc[()]

    def as_series(self, order):
        num = np.array([1.0 + 0j])
        den = np.array([1.0 + 0j])
        for a in self.zeros:
            num = np.convolve(num, [-a, 1.0])
            den = np.convolve(den, [1.0, -np.conj(a)])
        if order < len(num) - 1:
            raise BadParameter("order too small for this Blaschke degree")
        ns = TaylorSeries(self.phase * num).pad(order)
        return ns / TaylorSeries(den).pad(order)

    def label(self):
        return f"blaschke(deg={self.degree})"


class SchwarzSeries(SchwarzFunction):
    """Schwarz function given by series coefficients with c0 = 0.

    Construction samples |omega| on a 400-point polar grid and rejects
    anything not strictly bounded by 1 there; genuine members should be
    built with room to spare (the random battery scales by 0.9).
    """

    _GRID_RADII = 20
    _GRID_ANGLES = 20

    def __init__(self, series):
        if not isinstance(series, TaylorSeries):
            series = TaylorSeries(series)
        if series.c[0] != 0:
            raise NonvanishingAtZero("a Schwarz function needs omega(0) = 0")
        self.series = series
        self._uc = series.c[1:] if series.order >= 1 else np.zeros(1, complex)
        self._upc = npoly.polyder(self._uc) if len(self._uc) > 1 else np.zeros(1, complex)
        radii = np.linspace(0.05, 0.99, self._GRID_RADII)
        zs = radii[:, None] * np.exp(
            2j * np.pi * np.arange(self._GRID_ANGLES) / self._GRID_ANGLES
        )
        if np.max(np.abs(self.omega(zs))) >= 1.0 - 1e-12:
            raise BadParameter("series is not strictly bounded by 1 on the test grid")

    def u(self, z):
        return npoly.polyval(z, self._uc)

    def u_prime(self, z):
        return npoly.polyval(z, self._upc)

    def as_series(self, order):
        return self.series.pad(order).truncate(order)

    def label(self):
        return f"schwarz-series(order={self.series.order})"


# ----------------------------------------------------------------------
# construction from a Schwarz function
# ----------------------------------------------------------------------

def _ode_series(spec, omega, order):
    """Integrate f''/f' = prefactor * omega/(z(1-omega)) to a Taylor series of f."""
    os_ = omega.as_series(order)
    u = os_.divide_by_z()
    p = (u / (1.0 - os_)) * spec.prefactor
    f1 = p.integrate().exp()
    return f1.integrate()


def build_from_schwarz(spec, omega, order=DEFAULT_ORDER):
    """The member of ``spec`` generated by ``omega``, as a SeriesFunction.

    The normalization f(0) = 0, f'(0) = 1 holds exactly by construction.
    Choose ``order`` for the largest radius you will evaluate at
    (``order_for_radius`` is the rule the verification batteries use).
    """
    return SeriesFunction(_ode_series(spec, omega, order))


class SubordinationFunction(AnalyticFunction):
    """Class member defined by its Schwarz function, with exact derivative ratios.

    f and f' values come from the ODE-built series at the current order;
    f''/f' and f'''/f' come from omega in closed form, so ``schwarzian`` of
    this variant is truncation-free at every radius.
    """

    def __init__(self, spec, omega, order=DEFAULT_ORDER):
        self.spec = spec
        self.omega = omega
        self._rebuild(order)

    def _rebuild(self, order):
        fs = _ode_series(self.spec, self.omega, order)
        self._fc = fs.c
        self._f1c = npoly.polyder(fs.c)
        self.order_built = order

    def ensure_accuracy(self, r):
        """Raise the series order so f, f' values are accurate at radius ``r``."""
        need = order_for_radius(min(float(r), 1.0 - 1e-12))
        if need > self.order_built:
            self._rebuild(need)

    @property
    def series(self):
        return TaylorSeries(self._fc)

    def jet3(self, z):
        f = npoly.polyval(z, self._fc)
        f1 = npoly.polyval(z, self._f1c)
        u = self.omega.u(z)
        up = self.omega.u_prime(z)
        g = 1.0 - z * u  # 1 - omega(z)
        c = self.spec.prefactor
        p = c * u / g
        pp = c * (up + u * u) / (g * g)
        return Jet3(f, f1, p * f1, (pp + p * p) * f1)

    def label(self):
        return f"subord({self.spec.label()}, {self.omega.label()})"


# ----------------------------------------------------------------------
# the extremal families
# ----------------------------------------------------------------------

def extremal_g(beta):
    """The closed-form extremal of GBeta(beta); saturates both sharp bounds."""
    from .functions import ExtremalG

    return ExtremalG(beta)


def b_param(alpha, z0):
    """Second Blaschke zero of the pointwise-extremal Schwarz function.

    b = z0 (2 + alpha - alpha z0^2) / (1 + alpha + z0^2 - alpha z0^2);
    strictly increasing in z0 with b(-1) = -1, b(1) = 1, so |b| < 1.
    """
    if not -0.5 <= alpha <= 0.0:
        raise BadParameter(f"alpha must lie in [-1/2, 0], got {alpha}")
    if not -1.0 < z0 < 1.0:
        raise BadParameter(f"z0 must lie in (-1, 1), got {z0}")
    z2 = z0 * z0
    return z0 * (2.0 + alpha - alpha * z2) / (1.0 + alpha + z2 - alpha * z2)


def extremal_f(alpha, z0, order=DEFAULT_ORDER):
    """Member of FAlpha(alpha) whose Schwarzian attains the pointwise bound at z0.

    Its Schwarz function is the degree-2 Blaschke product
    omega(z) = -z (z - b)/(1 - b z), encoded as zeros {0, b} with rotation pi.
    """
    b = b_param(alpha, z0)
    omega = BlaschkeProduct((0.0, b), rotation=np.pi)
    return SubordinationFunction(FAlpha(alpha), omega, order=order)


# ----------------------------------------------------------------------
# membership and the quasiconformal constant
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipReport:
    ok: bool
    worst_margin: float
    worst_point: complex


#: Strict inequalities become nonstrict numerically at boundary-approaching
#: grid points; this is the tolerance the check allows.
MEMBERSHIP_TOL = -1e-9


def membership_check(f, spec, grid=None):
    """Sample q(z) = 1 + z f''/f' over a polar grid and report the worst margin.

    For GBeta the margin is (1 + beta/2) - Re q, for FAlpha it is
    Re q - alpha; membership requires the margin to stay above -1e-9.
    """
    from .disk import GridConfig

    if grid is None:
        grid = GridConfig.chebyshev(60, 60, 0.99)
    zs = grid.mesh()
    q = 1.0 + zs * pre_schwarzian(f, zs)
    margins = spec.margin(q)
    idx = np.unravel_index(int(np.argmin(margins)), margins.shape)
    worst = float(margins[idx])
    return MembershipReport(
        ok=worst > MEMBERSHIP_TOL,
        worst_margin=worst,
        worst_point=complex(zs[idx]),
    )


def qc_constant(spec):
    """Dilatation bound k < 1 of a quasiconformal extension, when one follows.

    A norm bound ||S_f|| <= 2k with k < 1 yields a k-quasiconformal
    extension; this gives k = beta(2+beta) for GBeta with beta < sqrt(2)-1.
    For FAlpha the candidate (1-alpha)/(1+alpha) is >= 1 throughout the
    admissible range, so no constant is reported.
    """
    k = spec.norm_bound() / 2.0
    return k if k < 1.0 else None
