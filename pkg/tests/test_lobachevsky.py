import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from rightangled.lobachevsky import (ErrBoundedValue, lobachevsky, lobachevsky_values,
                                     orthoscheme_volume, v3, v8)

mpmath.mp.dps = 40


def clausen_oracle(x: float) -> float:
    # L(x) = Cl2(2x) / 2
    return float(mpmath.clsin(2, 2 * mpmath.mpf(x)) / 2)


def quad_oracle(x: float) -> float:
    val, _ = quad(lambda t: -math.log(abs(2 * math.sin(t))), 0.0, x,
                  points=[math.pi * k for k in range(1, int(x / math.pi) + 1)],
                  limit=200, epsabs=1e-13, epsrel=1e-13)
    return val


finite_angles = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
first_quarter = st.floats(min_value=0.0, max_value=math.pi / 2)


def test_zero_is_exact():
    r = lobachevsky(0.0)
    assert r.value == 0.0 and r.abs_err == 0.0


def test_half_pi_vanishes():
    assert abs(lobachevsky(math.pi / 2).value) <= 1e-12


@pytest.mark.parametrize("x", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(x):
    with pytest.raises(ValueError):
        lobachevsky(x)


def test_constants_match_published_digits():
    # the quoted six decimals are truncations: v3 = 1.01494160...
    assert math.floor(v8().value * 1e6) == 3663862
    assert math.floor(v3().value * 1e6) == 1014941
    assert abs(v8().value - 3.663862) <= 5e-7


def test_constants_against_clausen():
    assert v8().contains(8 * clausen_oracle(math.pi / 4), 1e-15)
    assert v3().contains(3 * clausen_oracle(math.pi / 3), 1e-15)


def test_tetrahedral_identity():
    assert abs(v3().value - 2 * lobachevsky(math.pi / 6).value) <= 1e-11


def test_error_bound_small_on_first_quarter():
    xs = np.linspace(0, math.pi / 2, 501)
    assert max(lobachevsky(float(x)).abs_err for x in xs) <= 1e-12


@settings(max_examples=300, deadline=None)
@given(finite_angles)
def test_value_within_error_of_clausen(x):
    r = lobachevsky(x)
    assert abs(r.value - clausen_oracle(x)) <= r.abs_err


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
def test_quadrature_cross_check():
    xs = np.linspace(0.01, 3.1, 100)
    for x in xs:
        assert abs(lobachevsky(float(x)).value - quad_oracle(float(x))) <= 1e-9


@settings(max_examples=200, deadline=None)
@given(finite_angles)
def test_odd(x):
    a, b = lobachevsky(x), lobachevsky(-x)
    assert abs(a.value + b.value) <= a.abs_err + b.abs_err


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=-20.0, max_value=20.0))
def test_pi_periodic(x):
    a, b = lobachevsky(x), lobachevsky(x + math.pi, 2e-15 * (1 + abs(x)))
    assert abs(a.value - b.value) <= a.abs_err + b.abs_err


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-6, max_value=math.pi / 2 - 1e-6))
def test_duplication(x):
    lhs = lobachevsky(2 * x)
    r1, r2 = lobachevsky(x), lobachevsky(x + math.pi / 2)
    tol = lhs.abs_err + 2 * r1.abs_err + 2 * r2.abs_err
    assert abs(lhs.value - 2 * r1.value - 2 * r2.value) <= tol


@settings(max_examples=200, deadline=None)
@given(first_quarter, first_quarter)
def test_concave_on_first_quarter(a, b):
    mid = lobachevsky((a + b) / 2)
    avg = (lobachevsky(a).value + lobachevsky(b).value) / 2
    assert mid.value >= avg - 1e-12


@settings(max_examples=200, deadline=None)
@given(first_quarter)
def test_maximum_at_pi_over_six(x):
    top = lobachevsky(math.pi / 6)
    r = lobachevsky(x)
    assert top.value >= r.value - top.abs_err - r.abs_err


def test_vectorised_agrees_with_scalar():
    xs = np.linspace(-7, 7, 301)
    vals = lobachevsky_values(xs)
    for x, v in zip(xs, vals):
        r = lobachevsky(float(x))
        assert abs(v - r.value) <= 2 * r.abs_err + 1e-15


@pytest.mark.parametrize("alpha, expected", [
    (0.0, 0.0),
    (math.pi / 4, 3.663862376708876 / 16),
    (math.pi / 6, 1.0149416064096536 / 4),
])
def test_orthoscheme(alpha, expected):
    assert abs(orthoscheme_volume(alpha).value - expected) <= 1e-6


@pytest.mark.parametrize("alpha", [-0.1, math.pi / 2 + 0.01])
def test_orthoscheme_domain(alpha):
    with pytest.raises(ValueError):
        orthoscheme_volume(alpha)


class TestErrBoundedValue:
    def test_add_sub_accumulate(self):
        a = ErrBoundedValue(1.0, 1e-10)
        b = ErrBoundedValue(2.0, 2e-10)
        assert (a + b).abs_err >= 3e-10
        assert (a - b).abs_err >= 3e-10
        assert (a + b).value == 3.0

    def test_exact_scalar_scales_error(self):
        a = ErrBoundedValue(1.5, 1e-10)
        r = a * 4
        assert r.value == 6.0
        assert 4e-10 <= r.abs_err <= 4e-10 + 4e-15

    def test_rejects_negative_error(self):
        with pytest.raises(ValueError):
            ErrBoundedValue(1.0, -1.0)

    @given(st.floats(-1e3, 1e3), st.floats(0, 1e-6), st.floats(-1e3, 1e3), st.floats(0, 1e-6),
           st.floats(-1, 1), st.floats(-1, 1))
    def test_sum_encloses_perturbed_inputs(self, x, ex, y, ey, s, t):
        a, b = ErrBoundedValue(x, ex), ErrBoundedValue(y, ey)
        true = (x + s * ex) + (y + t * ey)
        assert (a + b).contains(true, 1e-12 * (1 + abs(true)))
