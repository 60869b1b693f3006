"""Lobachevsky function with a rigorous absolute-error bound.

The function is evaluated through the series

    L(x) = x (1 - log 2x) + sum_{n>=1} zeta(2n) / (n (2n+1)) * x (x/pi)^(2n)

after reducing the argument into [0, pi/2] with oddness and pi-periodicity.
On that interval the series ratio is at most 1/4, so a fixed number of terms
leaves a tail far below double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Real

import numpy as np
from scipy.special import zeta

EPS = 2.0**-52
# float(pi) is within this of the true pi
_PI_ERR = 1.2246467991473532e-16

_NTERMS = 40
_ZETA_EVEN = np.array([zeta(2 * n) for n in range(1, _NTERMS + 1)])
_N = np.arange(1, _NTERMS + 1, dtype=float)
_COEF = _ZETA_EVEN / (_N * (2 * _N + 1))


@dataclass(frozen=True)
class ErrBoundedValue:
    """A binary64 value with an absolute error bound.

    Arithmetic propagates the bound conservatively: absolute errors add under
    addition and subtraction, scale under multiplication by an exact scalar, and
    each operation adds one rounding unit of the result.
    """

    value: float
    abs_err: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite value {self.value!r}")
        if not (self.abs_err >= 0.0):
            raise ValueError(f"abs_err must be >= 0, got {self.abs_err!r}")

    @property
    def lower(self) -> float:
        return self.value - self.abs_err

    @property
    def upper(self) -> float:
        return self.value + self.abs_err

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return abs(x - self.value) <= self.abs_err + slack

    def __float__(self) -> float:
        return self.value

    def _coerce(self, other):
        if isinstance(other, ErrBoundedValue):
            return other
        if isinstance(other, (Real, Fraction)):
            v = float(other)
            # exact scalars (ints, dyadic fractions) carry no error
            err = 0.0 if Fraction(v) == Fraction(other) else EPS * abs(v)
            return ErrBoundedValue(v, err)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        v = self.value + o.value
        return ErrBoundedValue(v, self.abs_err + o.abs_err + EPS * abs(v))

    __radd__ = __add__

    def __neg__(self):
        return ErrBoundedValue(-self.value, self.abs_err)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        v = self.value * o.value
        err = (abs(self.value) * o.abs_err + abs(o.value) * self.abs_err
               + self.abs_err * o.abs_err + EPS * abs(v))
        return ErrBoundedValue(v, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ErrBoundedValue):
            raise TypeError("division by an ErrBoundedValue is not supported")
        return self * (Fraction(1) / Fraction(other))

    def __repr__(self):
        return f"ErrBoundedValue({self.value!r} ± {self.abs_err:.3g})"


def _series(theta: float) -> tuple[float, float]:
    """Series value and error bound for theta in [0, pi/2]."""
    if theta == 0.0:
        return 0.0, 0.0
    r = (theta / math.pi) ** 2
    powers = r ** _N
    terms = theta * _COEF * powers
    head = theta * (1.0 - math.log(2.0 * theta))
    # sum smallest terms first
    tail_sum = float(np.sum(terms[::-1]))
    value = head + tail_sum
    # remainder after _NTERMS terms, zeta(2n) <= zeta(2) and geometric ratio r
    m = _NTERMS + 1
    remainder = theta * zeta(2 * m) * r**m / (m * (2 * m + 1) * (1.0 - r))
    magnitude = abs(head) + theta * (1.0 + abs(math.log(2.0 * theta))) + tail_sum
    rounding = 8 * _NTERMS * EPS * magnitude
    return value, remainder + rounding


def _perturbation(theta: float, d: float) -> float:
    """Bound on |L(t) - L(theta)| for |t - theta| <= d, theta in [0, pi/2]."""
    if d == 0.0:
        return 0.0
    lo = theta - d
    if lo <= 0.0:
        # integral of |log 2 sin t| over an interval of length <= 2d near 0
        w = 2.0 * d + max(lo, 0.0)
        return w * (1.0 + abs(math.log(2.0 * w)))
    hi = min(theta + d, math.pi / 2)
    slope = max(abs(math.log(2.0 * math.sin(lo))), abs(math.log(2.0 * math.sin(hi))))
    return d * (slope + 1e-3)


def lobachevsky(x: float, x_err: float = 0.0) -> ErrBoundedValue:
    """Evaluate L(x) = -int_0^x log|2 sin t| dt.

    ``x_err`` is an optional bound on the error already present in ``x``; its
    effect on the result is folded into ``abs_err``.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"Lobachevsky function needs a finite argument, got {x!r}")
    if x == 0.0 and x_err == 0.0:
        return ErrBoundedValue(0.0, 0.0)
    k = round(x / math.pi)
    r = math.remainder(x, math.pi)
    sign = -1.0 if r < 0 else 1.0
    theta = abs(r)
    value, err = _series(theta)
    d = 2.0 * (abs(k) * _PI_ERR + EPS * abs(r)) + x_err
    err += _perturbation(theta, d)
    return ErrBoundedValue(sign * value, err)


def lobachevsky_values(xs) -> np.ndarray:
    """Vectorised L(x) without error tracking, for sampling and plotting."""
    xs = np.asarray(xs, dtype=float)
    r = np.remainder(xs + math.pi / 2, math.pi) - math.pi / 2
    theta = np.abs(r)
    safe = np.where(theta == 0.0, 1.0, theta)
    ratio = (safe / math.pi) ** 2
    powers = ratio[..., None] ** _N
    series = safe * np.sum(_COEF * powers, axis=-1)
    vals = safe * (1.0 - np.log(2.0 * safe)) + series
    vals = np.where(theta == 0.0, 0.0, vals)
    return np.sign(r) * vals


@lru_cache(maxsize=None)
def v8() -> ErrBoundedValue:
    """Volume of the regular ideal octahedron, 8 L(pi/4)."""
    return 8 * lobachevsky(math.pi / 4, EPS)


@lru_cache(maxsize=None)
def v3() -> ErrBoundedValue:
    """Volume of the regular ideal tetrahedron, 3 L(pi/3)."""
    return 3 * lobachevsky(math.pi / 3, EPS)


def orthoscheme_volume(alpha: float) -> ErrBoundedValue:
    """Volume L(alpha)/2 of the ideal orthoscheme with parameter alpha."""
    if not 0.0 <= alpha <= math.pi / 2:
        raise ValueError(f"orthoscheme parameter must lie in [0, pi/2], got {alpha!r}")
    return lobachevsky(alpha) / 2
