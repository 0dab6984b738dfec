"""Truncated complex Taylor series centered at 0.

A :class:`TaylorSeries` stores coefficients ``c[0] .. c[N]`` of::

    a(z) = c[0] + c[1] z + ... + c[N] z**N

and supports the calculus needed to manipulate analytic functions on the
unit disk: ring arithmetic, exp/log/pow, composition, differentiation,
integration from 0, division by z, and jet evaluation.  Binary operations
truncate to the smaller of the two orders -- an operation never invents
coefficients it cannot know.  Values are immutable after construction and
safe to share between threads.

Everything is plain complex double precision; evaluation close to the
boundary of the disk is the caller's responsibility (``tail_indicator``
gives the usual heuristic for how much the truncation is costing).
"""

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (
    BadParameter,
    BranchPointAtCenter,
    DivisionByNonUnit,
    NonvanishingAtZero,
    NonvanishingInner,
    OutsideDisk,
)

#: Default truncation order for series built by the higher-level modules.
DEFAULT_ORDER = 128

# np.convolve is O(n^2); above this length multiplication switches to an
# FFT product (relative error ~1e-15, irrelevant at such orders).
_FFT_MUL_THRESHOLD = 600


def _mul_trunc(a, b, n_keep):
    """First ``n_keep`` coefficients of the Cauchy product of ``a`` and ``b``."""
    if len(a) <= _FFT_MUL_THRESHOLD and len(b) <= _FFT_MUL_THRESHOLD:
        return np.convolve(a, b)[:n_keep]
    size = 1
    full = len(a) + len(b) - 1
    while size < full:
        size *= 2
    prod = np.fft.ifft(np.fft.fft(a, size) * np.fft.fft(b, size))
    return prod[:n_keep]


class TaylorSeries:
    """Immutable truncated power series with complex coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
        if c.ndim != 1 or c.size == 0:
            raise BadParameter("coefficients must form a nonempty 1-d sequence")
        if not np.all(np.isfinite(c.real)) or not np.all(np.isfinite(c.imag)):
            raise BadParameter("series coefficients must all be finite")
        c = c.copy()
        c.setflags(write=False)
        self.c = c

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, order=0):
        return cls(np.zeros(order + 1))

    @classmethod
    def constant(cls, value, order=0):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order=DEFAULT_ORDER):
        """The series of z itself."""
        if order < 1:
            raise BadParameter("identity needs order >= 1")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    # ------------------------------------------------------------------
    # basics
    # ------------------------------------------------------------------
    @property
    def order(self):
        return len(self.c) - 1

    def pad(self, order):
        """Extend with zero coefficients up to ``order`` (never truncates)."""
        if order <= self.order:
            return self
        c = np.zeros(order + 1, dtype=np.complex128)
        c[: len(self.c)] = self.c
        return TaylorSeries(c)

    def truncate(self, order):
        if order >= self.order:
            return self
        if order < 0:
            raise BadParameter("order cannot be negative")
        return TaylorSeries(self.c[: order + 1])

    def __repr__(self):
        head = np.array2string(self.c[:6], precision=6, separator=", ")
        tail = ", ..." if self.order > 5 else ""
        return f"TaylorSeries(order={self.order}, c={head[:-1]}{tail}])"

    # ------------------------------------------------------------------
    # ring arithmetic (binary ops truncate to the common order)
    # ------------------------------------------------------------------
    def _common(self, other):
        n = min(self.order, other.order)
        return n, self.c[: n + 1], other.c[: n + 1]

    def __add__(self, other):
        if isinstance(other, TaylorSeries):
            _, a, b = self._common(other)
            return TaylorSeries(a + b)
        c = self.c.copy()
        c[0] = c[0] + other
        return TaylorSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return TaylorSeries(-self.c)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TaylorSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            n, a, b = self._common(other)
            return TaylorSeries(_mul_trunc(a, b, n + 1))
        return TaylorSeries(self.c * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TaylorSeries):
            return TaylorSeries(self.c / other)
        if other.c[0] == 0:
            raise DivisionByNonUnit("denominator constant term is zero")
        n, a, b = self._common(other)
        q = np.empty(n + 1, dtype=np.complex128)
        brev = b[::-1].copy()
        b0 = b[0]
        q[0] = a[0] / b0
        for m in range(1, n + 1):
            # q[m] = (a[m] - sum_{i<m} q[i] b[m-i]) / b[0]
            q[m] = (a[m] - np.dot(q[:m], brev[n - m : n])) / b0
        return TaylorSeries(q)

    def __rtruediv__(self, other):
        return TaylorSeries.constant(other, self.order) / self

    # ------------------------------------------------------------------
    # calculus
    # ------------------------------------------------------------------
    def derivative(self):
        """Termwise derivative; the order drops by one."""
        if self.order == 0:
            return TaylorSeries.zero(0)
        return TaylorSeries(self.c[1:] * np.arange(1, len(self.c)))

    def integrate(self):
        """Antiderivative vanishing at 0; the order grows by one."""
        out = np.empty(len(self.c) + 1, dtype=np.complex128)
        out[0] = 0.0
        out[1:] = self.c / np.arange(1, len(self.c) + 1)
        return TaylorSeries(out)

    def divide_by_z(self):
        """a(z)/z for a series with a(0) = 0 (the singularity is removable)."""
        if self.c[0] != 0:
            raise NonvanishingAtZero("constant term must vanish to divide by z")
        if len(self.c) == 1:
            return TaylorSeries.zero(0)
        return TaylorSeries(self.c[1:])

    # ------------------------------------------------------------------
    # transcendental maps
    # ------------------------------------------------------------------
    def exp(self):
        """exp(a) through the same order, via (exp a)' = a' exp a."""
        n = self.order
        out = np.empty(n + 1, dtype=np.complex128)
        out[0] = np.exp(self.c[0])
        if n == 0:
            return TaylorSeries(out)
        ja = self.c * np.arange(n + 1)  # ja[k] = k c[k]
        jarev = ja[::-1].copy()
        for m in range(1, n + 1):
            # m out[m] = sum_{j=1..m} j c[j] out[m-j]
            out[m] = np.dot(out[:m], jarev[n - m : n]) / m
        return TaylorSeries(out)

    def log(self):
        """Principal-branch log(a); requires a(0) != 0."""
        if self.c[0] == 0:
            raise BranchPointAtCenter("log of a series vanishing at 0")
        head = np.log(complex(self.c[0]))
        if self.order == 0:
            return TaylorSeries([head])
        # log(a) = log a(0) + integral of a'/a
        body = (self.derivative() / self.truncate(self.order - 1)).integrate()
        return body + head

    def pow(self, gamma):
        """Principal branch a**gamma = exp(gamma log a); requires a(0) != 0."""
        if self.c[0] == 0:
            raise BranchPointAtCenter("pow of a series vanishing at 0")
        return (self.log() * gamma).exp()

    # ------------------------------------------------------------------
    # composition and evaluation
    # ------------------------------------------------------------------
    def compose(self, inner):
        """self(inner(z)) truncated at the shared order; needs inner(0) = 0."""
        if not isinstance(inner, TaylorSeries):
            raise BadParameter("inner must be a TaylorSeries")
        if inner.c[0] != 0:
            raise NonvanishingInner("composition needs inner(0) = 0")
        n = min(self.order, inner.order)
        a = self.c[: n + 1]
        b = TaylorSeries(inner.c[: n + 1])
        acc = TaylorSeries.constant(a[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * b + a[k]
        return acc

    def __call__(self, x):
        """Compose with a series, or evaluate at a point / array of points."""
        if isinstance(x, TaylorSeries):
            return self.compose(x)
        return npoly.polyval(x, self.c)

    def eval_jet(self, z, k):
        """[a(z), a'(z), ..., a^(k)(z)] by Horner evaluation of formal derivatives.

        ``z`` may be a complex scalar or an ndarray; every point must lie in
        the open unit disk.
        """
        if k < 0 or k > self.order:
            raise BadParameter(f"jet depth {k} not in [0, order={self.order}]")
        if np.any(np.abs(z) >= 1.0):
            raise OutsideDisk("jet evaluation requires |z| < 1")
        vals = []
        cur = self.c
        for _ in range(k + 1):
            vals.append(npoly.polyval(z, cur))
            cur = npoly.polyder(cur)
        return vals

    def tail_indicator(self, z):
        """|c_N z^N|: magnitude of the last retained term, a truncation heuristic."""
        return float(np.abs(self.c[-1])) * float(np.abs(z)) ** self.order
