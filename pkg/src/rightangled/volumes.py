"""Exact volumes of the antiprisms A(n) and the Loebell polytopes L(n)."""
from __future__ import annotations

import math

from .lobachevsky import EPS, ErrBoundedValue, lobachevsky

# error of one libm arccos/cos call, folded into the angle
ARCCOS_ERR = 1e-14


def vol_antiprism(n: int) -> ErrBoundedValue:
    """2n [L(pi/4 + pi/2n) + L(pi/4 - pi/2n)]."""
    if n < 3:
        raise ValueError(f"antiprism volume needs n >= 3, got {n}")
    d = math.pi / (2 * n)
    arg_err = 4 * EPS
    return 2 * n * (lobachevsky(math.pi / 4 + d, arg_err)
                    + lobachevsky(math.pi / 4 - d, arg_err))


def loebell_theta(n: int) -> tuple[float, float]:
    """theta = pi/2 - arccos(1 / (2 cos(pi/n))) and a bound on its error."""
    if n < 5:
        raise ValueError(f"Loebell volume needs n >= 5, got {n}")
    theta = math.pi / 2 - math.acos(1.0 / (2.0 * math.cos(math.pi / n)))
    return theta, 2 * ARCCOS_ERR + 4 * EPS


def vol_loebell(n: int) -> ErrBoundedValue:
    """(n/2) [2L(t) + L(t + pi/n) + L(t - pi/n) - L(2t - pi/2)]."""
    theta, err = loebell_theta(n)
    s = math.pi / n
    total = (2 * lobachevsky(theta, err)
             + lobachevsky(theta + s, err + 2 * EPS)
             + lobachevsky(theta - s, err + 2 * EPS)
             - lobachevsky(2 * theta - math.pi / 2, 2 * err + 2 * EPS))
    return total * n / 2


def family_volume(family: str, n: int) -> ErrBoundedValue:
    if family == "antiprism":
        return vol_antiprism(n)
    if family == "loebell":
        return vol_loebell(n)
    raise ValueError(f"no closed-form volume for family {family!r}")
