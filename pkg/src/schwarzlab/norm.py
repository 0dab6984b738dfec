"""Estimation of the hyperbolic sup-norm of the Schwarzian.

The norm is sup over the disk of (1 - |z|^2)^2 |S_f(z)|.  For the families
handled here the supremum is typically *not* attained inside the disk -- the
extremals approach it radially as r -> 1 -- so the estimator reports two
things and keeps them distinct: a certified interior maximum (grid scan plus
derivative-free refinement, every value actually evaluated) and a boundary
extrapolation of the radial profile in (1 - r), flagged by ``extrapolated``.

The pointwise bound functions and the scalar profiles used inside the sharp
proofs (g for the GBeta argument, h for the FAlpha argument, with their
known maximizers) live here too, so the maximization step of each bound can
be checked numerically on its own.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .disk import GridConfig
from .errors import BadParameter, OutsideDisk
from .families import FAlpha, GBeta
from .functions import schwarzian

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def weighted_profile(f, r, theta):
    """(1 - r^2)^2 |S_f(r e^{i theta})|; r and theta broadcast."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r >= 1):
        raise OutsideDisk("profile radius must lie in [0, 1)")
    z = r * np.exp(1j * np.asarray(theta, dtype=float))
    w = (1.0 - r * r) ** 2
    return w * np.abs(schwarzian(f, z))


def _golden_max(fn, lo, hi, iters=64):
    """Golden-section maximizer; returns the best (x, fn(x)) actually evaluated."""
    best_x, best_v = lo, fn(lo)
    v_hi = fn(hi)
    if v_hi > best_v:
        best_x, best_v = hi, v_hi
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc > best_v:
            best_x, best_v = c, fc
        if fd > best_v:
            best_x, best_v = d, fd
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    return best_x, best_v


@dataclass(frozen=True)
class NormReport:
    """Sup-norm estimate with peak location and boundary diagnostics.

    ``estimate`` is max(interior_max, boundary_estimate): the interior part
    is a certified lower bound (every value was evaluated), the boundary
    part a linear extrapolation of the radial profile in (1 - r), present
    only when the profile was still increasing at r_max (``extrapolated``).
    When the boundary estimate wins, (peak_r, peak_theta) is (r_max, best
    angle); otherwise it is the refined interior argmax.
    """

    estimate: float
    peak_r: float
    peak_theta: float
    extrapolated: bool
    interior_max: float
    boundary_estimate: float | None
    theoretical_bound: float | None
    slack: float | None


def estimate_norm(f, cfg=None, spec=None):
    """Estimate sup (1-|z|^2)^2 |S_f| by scan, refinement, and extrapolation.

    Stages: (1) polar grid scan of the weighted profile; (2) the best five
    cells refined by golden-section coordinate descent in r then theta then
    r again; (3) along the best angle, the profile at the last five grid
    radii is fitted linearly in (1 - r) and extrapolated to the boundary if
    still increasing at r_max.  Argmax ties break toward smaller r.

    ``spec`` (optional) attaches the family's theoretical bound and the
    resulting slack to the report.
    """
    if cfg is None:
        cfg = GridConfig.chebyshev(64, 96, 0.995)
    radii, thetas = cfg.radii, cfg.thetas()
    prof = weighted_profile(f, radii[:, None], thetas[None, :])

    flat = prof.ravel()
    ri, ti = np.unravel_index(np.arange(flat.size), prof.shape)
    order = np.lexsort((thetas[ti], radii[ri], -flat))
    n_r = len(radii)

    best_v, best_r, best_t = -1.0, 0.0, 0.0
    for cell in order[: min(5, flat.size)]:
        i, j = int(ri[cell]), int(ti[cell])
        th = thetas[j]
        r_lo = radii[i - 1] if i > 0 else 0.0
        r_hi = radii[i + 1] if i < n_r - 1 else radii[-1]
        r1, _ = _golden_max(lambda rr: weighted_profile(f, rr, th), r_lo, r_hi)
        dth = 2.0 * np.pi / cfg.angles
        t1, _ = _golden_max(lambda tt: weighted_profile(f, r1, tt), th - dth, th + dth)
        r2, v2 = _golden_max(lambda rr: weighted_profile(f, rr, t1), r_lo, r_hi)
        if v2 > best_v or (v2 == best_v and r2 < best_r):
            best_v, best_r, best_t = float(v2), float(r2), float(t1)

    interior = best_v
    boundary = None
    increasing = False
    if n_r >= 5:
        tail_r = radii[-5:]
        y = weighted_profile(f, tail_r, best_t)
        increasing = bool(y[-1] > y[-2])
        if increasing:
            t = 1.0 - tail_r
            coeffs = npoly.polyfit(t, y, 1)
            boundary = float(coeffs[0])

    if boundary is not None and boundary > interior:
        estimate, peak_r, peak_t = boundary, float(cfg.r_max), best_t
    else:
        estimate, peak_r, peak_t = interior, best_r, best_t

    bound = spec.norm_bound() if spec is not None else None
    return NormReport(
        estimate=estimate,
        peak_r=peak_r,
        peak_theta=peak_t,
        extrapolated=increasing,
        interior_max=interior,
        boundary_estimate=boundary,
        theoretical_bound=bound,
        slack=(bound - estimate) if bound is not None else None,
    )


# ----------------------------------------------------------------------
# pointwise bounds
# ----------------------------------------------------------------------

def pointwise_bound_g(beta, z):
    """Sharp pointwise bound for GBeta: beta(2+beta) / (2 (1-|z|)^2)."""
    if not beta > 0:
        raise BadParameter(f"beta must be positive, got {beta}")
    a = np.abs(z)
    if np.any(a >= 1.0):
        raise OutsideDisk("bound is stated for |z| < 1")
    return beta * (2.0 + beta) / (2.0 * (1.0 - a) ** 2)


def pointwise_bound_f(alpha, z):
    """Sharp pointwise bound for FAlpha:
    2(1-alpha)/(1+alpha) * (1 + alpha - alpha |z|^2) / (1 - |z|^2)^2."""
    if not -0.5 <= alpha <= 0.0:
        raise BadParameter(f"alpha must lie in [-1/2, 0], got {alpha}")
    a2 = np.abs(z) ** 2
    if np.any(a2 >= 1.0):
        raise OutsideDisk("bound is stated for |z| < 1")
    lead = 2.0 * (1.0 - alpha) / (1.0 + alpha)
    return lead * (1.0 + alpha - alpha * a2) / (1.0 - a2) ** 2


# ----------------------------------------------------------------------
# scalar profiles behind the sharp bounds, and their maximizers
# ----------------------------------------------------------------------

def g_profile(beta, absz, s):
    """GBeta bound profile over s = |omega(z)| in (0, |z|]; maximized at s = |z|."""
    a2 = absz * absz
    num = 2.0 * a2 + s * s * (beta - beta * a2 - 2.0 * a2)
    return num / (2.0 * a2 * (1.0 - a2) * (1.0 - s) ** 2)


def h_profile(alpha, absz, s):
    """FAlpha bound profile over s = |omega(z)| in (0, |z|];
    maximized at s = |z|^2 / (1 + alpha - alpha |z|^2)."""
    a2 = absz * absz
    num = a2 - s * s * (1.0 + alpha - alpha * a2)
    return 2.0 * (1.0 - alpha) * num / (a2 * (1.0 - a2) * (1.0 - s) ** 2)


@dataclass(frozen=True)
class AuxMaximizerReport:
    s_star: float
    numeric_argmax: float


def aux_maximizer_check(spec, absz):
    """Compare the known maximizer of the bound profile against a numeric argmax.

    The numeric side is a dense scan of s over (0, |z|] followed by
    golden-section refinement of the best bracket.
    """
    if not 0.0 < absz < 1.0:
        raise BadParameter("absz must lie in (0, 1)")
    if isinstance(spec, GBeta):
        fn = lambda s: g_profile(spec.beta, absz, s)
        s_star = absz
    elif isinstance(spec, FAlpha):
        fn = lambda s: h_profile(spec.alpha, absz, s)
        s_star = absz * absz / (1.0 + spec.alpha - spec.alpha * absz * absz)
    else:
        raise BadParameter("spec must be GBeta or FAlpha")
    ss = np.linspace(absz / 2000.0, absz, 2000)
    vals = fn(ss)
    i = int(np.argmax(vals))
    lo = ss[i - 1] if i > 0 else ss[0] / 2.0
    hi = ss[i + 1] if i < len(ss) - 1 else absz
    x, _ = _golden_max(fn, float(lo), float(hi))
    return AuxMaximizerReport(s_star=float(s_star), numeric_argmax=float(x))
