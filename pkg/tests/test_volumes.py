import math

import mpmath
import pytest

from rightangled.bounds import compact_bounds, ideal_atkinson, ideal_upper_improved, BoundId
from rightangled.lobachevsky import v3, v8
from rightangled.volumes import family_volume, loebell_theta, vol_antiprism, vol_loebell

mpmath.mp.dps = 40


def lob(x):
    return mpmath.clsin(2, 2 * mpmath.mpf(x)) / 2


def antiprism_oracle(n):
    d = mpmath.pi / (2 * n)
    return float(2 * n * (lob(mpmath.pi / 4 + d) + lob(mpmath.pi / 4 - d)))


def loebell_oracle(n):
    t = mpmath.pi / 2 - mpmath.acos(1 / (2 * mpmath.cos(mpmath.pi / n)))
    s = mpmath.pi / n
    return float(n / 2 * (2 * lob(t) + lob(t + s) + lob(t - s) - lob(2 * t - mpmath.pi / 2)))


def test_octahedron_volume():
    vol = vol_antiprism(3)
    assert abs(vol.value - v8().value) <= vol.abs_err + v8().abs_err
    assert abs(vol.value - v8().value) <= 1e-10


def test_a4_published():
    assert abs(vol_antiprism(4).value - 6.023046) <= 5e-7


@pytest.mark.parametrize("n", [3, 4, 7, 13, 50])
def test_antiprism_against_high_precision(n):
    vol = vol_antiprism(n)
    assert vol.contains(antiprism_oracle(n), 1e-15)


@pytest.mark.parametrize("n", [5, 6, 9, 21, 50])
def test_loebell_against_high_precision(n):
    vol = vol_loebell(n)
    assert vol.contains(loebell_oracle(n), 1e-15)


def test_dodecahedron_between_atkinson_bounds():
    vol = vol_loebell(5).value
    assert 1.373948 <= vol <= 6.343381


def test_l6_below_v24_bound():
    assert vol_loebell(6).value <= 6.25 * v3().value


def test_theta_six():
    theta, _ = loebell_theta(6)
    assert abs(theta - (math.pi / 2 - math.acos(1 / math.sqrt(3)))) <= 1e-15


@pytest.mark.parametrize("n", [2, 0, -3])
def test_antiprism_domain(n):
    with pytest.raises(ValueError):
        vol_antiprism(n)


@pytest.mark.parametrize("n", [3, 4])
def test_loebell_domain(n):
    with pytest.raises(ValueError):
        vol_loebell(n)


def test_family_dispatch():
    assert family_volume("antiprism", 4) == vol_antiprism(4)
    with pytest.raises(ValueError):
        family_volume("cube", 4)


def test_per_vertex_volume_increases_to_quarter_v8():
    # both arguments tend to pi/4, so Vol(A(n)) / 2n -> 2 L(pi/4) = v8/4
    prev = 0.0
    for n in list(range(3, 200)) + [1000, 10000]:
        r = vol_antiprism(n).value / (2 * n)
        assert prev < r < v8().value / 4
        prev = r
    assert v8().value / 4 - prev < 1e-6


def test_monotone_in_n():
    a = [vol_antiprism(n).value for n in range(3, 51)]
    b = [vol_loebell(n).value for n in range(5, 51)]
    assert all(x < y for x, y in zip(a, a[1:]))
    assert all(x < y for x, y in zip(b, b[1:]))


def test_inside_atkinson_brackets():
    for n in range(3, 51):
        lo, hi = ideal_atkinson(2 * n)
        vol = vol_antiprism(n).value
        assert lo.value - 1e-12 <= vol <= hi.value + 1e-12
        if n >= 5:
            face = dict(ideal_upper_improved(2 * n, n, False))[BoundId.IDEAL_UPPER_FACE_DEGREE]
            assert vol <= face.value
    for n in range(5, 51):
        got = dict(compact_bounds(4 * n, n))
        vol = vol_loebell(n).value
        assert got[BoundId.COMPACT_LOWER_ATKINSON].value <= vol
        assert vol < got[BoundId.COMPACT_UPPER_ATKINSON].value
