"""Two-point distortion: the Delta functional and its sin/sinh bounds.

For analytic locally univalent f define, with d_f(z) = (1-|z|^2) |f'(z)|
the hyperbolic derivative,

    Delta_f(z1, z2) = |f(z1) - f(z2)| / sqrt(d_f(z1) d_f(z2)).

Whenever ||S_f|| <= 2(1 + delta^2) for some delta > 0, the classical
comparison bounds hold:

    Delta_f >= (1/delta) sin(delta * lam)          for lam <= pi/delta,
    Delta_f <= (1/sqrt(2+delta^2)) sinh(sqrt(2+delta^2) * lam),

with lam the hyperbolic distance of the two points.  ``delta_param`` turns a
family specification into its delta (GBeta needs beta > sqrt(2)-1, FAlpha
needs alpha < 0; otherwise the norm bound is <= 2 and delta is undefined),
``verify_tpd`` checks both bounds over a batch of point pairs, and
``tb_extremal`` evaluates the two power maps that saturate them.
"""

import math
from dataclasses import dataclass

import numpy as np

from .disk import hyperbolic_distance, pseudo_hyperbolic
from .errors import BadParameter, CoincidentPoints, OutOfRange, OutsideDisk
from .families import FAlpha, GBeta
from .functions import jet


def delta_functional(f, z1, z2):
    """Delta_f(z1, z2) for distinct points of the disk.

    Symmetric and positive; saturated (in the appropriate direction) by the
    power maps of :func:`tb_extremal` along hyperbolic geodesics.
    """
    z1, z2 = complex(z1), complex(z2)
    if z1 == z2:
        raise CoincidentPoints("the two-point functional needs z1 != z2")
    if abs(z1) >= 1.0 or abs(z2) >= 1.0:
        raise OutsideDisk("points must lie inside the disk")
    if hasattr(f, "ensure_accuracy"):
        f.ensure_accuracy(max(abs(z1), abs(z2)))
    j1, j2 = jet(f, z1), jet(f, z2)
    num = abs(j1.f - j2.f)
    d1 = (1.0 - abs(z1) ** 2) * abs(j1.f1)
    d2 = (1.0 - abs(z2) ** 2) * abs(j2.f1)
    return num / math.sqrt(d1 * d2)


def delta_param(spec):
    """delta > 0 with class norm bound = 2(1 + delta^2).

    sqrt(beta^2 + 2 beta - 1) for GBeta (beta > sqrt(2)-1) and
    sqrt(-2 alpha/(1+alpha)) for FAlpha (alpha < 0); raises BadParameter
    when the class bound is <= 2 and no such delta exists.
    """
    d2 = spec.norm_bound() / 2.0 - 1.0
    if d2 <= 1e-12:
        raise BadParameter(
            f"class norm bound {spec.norm_bound():g} <= 2: distortion delta undefined"
        )
    return math.sqrt(d2)


def tpd_lower(delta, lam):
    """(1/delta) sin(delta lam), valid for 0 <= lam <= pi/delta."""
    if not delta > 0:
        raise BadParameter("delta must be positive")
    if lam < 0:
        raise BadParameter("lambda must be nonnegative")
    if lam > math.pi / delta:
        raise OutOfRange("lower bound only valid for lambda <= pi/delta")
    return math.sin(delta * lam) / delta


def tpd_upper(delta, lam):
    """(1/sqrt(2+delta^2)) sinh(sqrt(2+delta^2) lam), valid everywhere."""
    if delta < 0 or lam < 0:
        raise BadParameter("delta and lambda must be nonnegative")
    s = math.sqrt(2.0 + delta * delta)
    return math.sinh(s * lam) / s


def tb_extremal(kind, delta, z):
    """The power maps attaining the bounds: ((1+z)/(1-z))^p, principal branch.

    kind 'F' uses p = i delta (saturates the lower bound),
    kind 'G' uses p = sqrt(2 + delta^2) (saturates the upper bound).
    """
    if np.any(np.abs(z) >= 1.0):
        raise OutsideDisk("extremal maps are defined on the disk")
    k = str(kind).upper()
    if k == "F":
        p = 1j * delta
    elif k == "G":
        p = math.sqrt(2.0 + delta * delta)
    else:
        raise BadParameter(f"kind must be 'F' or 'G', got {kind!r}")
    w = (1.0 + z) / (1.0 - z)  # right half-plane on the disk, log is safe
    return np.exp(p * np.log(w))


@dataclass(frozen=True)
class DistortionResult:
    """One pair's functional value against both bounds; ``lower`` is None
    when lam exceeds pi/delta and the sine bound does not apply."""

    rho: float
    lam: float
    delta_f: float
    lower: float | None
    upper: float
    delta_param: float


@dataclass(frozen=True)
class TpdReport:
    delta: float
    results: tuple
    worst_lower_slack: float | None
    worst_upper_slack: float
    lower_skipped: int
    ok: bool


#: Numerical tolerance on the (mathematically nonstrict) bound inequalities.
TPD_TOL = -1e-9


def verify_tpd(f, spec, pairs):
    """Check lower <= Delta_f <= upper for every pair; return the worst slacks.

    Raises BadParameter when ``spec`` has norm bound <= 2 (delta undefined);
    pairs with lam > pi/delta skip the lower bound, per its validity range.
    """
    d = delta_param(spec)
    lam_cap = math.pi / d
    results = []
    worst_lo, worst_up = None, math.inf
    skipped = 0
    for z1, z2 in pairs:
        rho = float(pseudo_hyperbolic(z1, z2))
        lam = float(hyperbolic_distance(z1, z2))
        df = delta_functional(f, z1, z2)
        up = tpd_upper(d, lam)
        if lam <= lam_cap:
            lo = tpd_lower(d, lam)
            slack_lo = df - lo
            worst_lo = slack_lo if worst_lo is None else min(worst_lo, slack_lo)
        else:
            lo = None
            skipped += 1
        worst_up = min(worst_up, up - df)
        results.append(
            DistortionResult(rho=rho, lam=lam, delta_f=df, lower=lo, upper=up, delta_param=d)
        )
    ok = worst_up >= TPD_TOL and (worst_lo is None or worst_lo >= TPD_TOL)
    return TpdReport(
        delta=d,
        results=tuple(results),
        worst_lower_slack=worst_lo,
        worst_upper_slack=worst_up,
        lower_skipped=skipped,
        ok=ok,
    )
