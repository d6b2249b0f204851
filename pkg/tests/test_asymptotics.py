from fractions import Fraction

import mpmath
import pytest

from cf3f2.asymptotics import (casoratian_check, cone_volume_fraction, measured_ratio, predict_f, predict_g,
                               t_vanishes)
from cf3f2.errors import ConditionsUnmet, TZero
from cf3f2.params import saalschutz_index
from cf3f2.series import g32_direct
from cf3f2.verify import EX1, EX3

F = Fraction
A_REF = (F(1, 2), F(1, 3), F(1, 5), F(2), F(3))
P = (2, 2, 2, 3, 3)


def test_predict_f_constants():
    with mpmath.workprec(128):
        pred = predict_f(A_REF, P)
        s = mpmath.mpf(saalschutz_index(A_REF).numerator) / saalschutz_index(A_REF).denominator
        assert abs(pred.leading_constant - mpmath.gamma(s) * mpmath.power(3, -s)) < 1e-30
        assert abs(pred.power + 2 * s) < 1e-30 and pred.growth_base == 1


def test_predict_f_boundary():
    with pytest.raises(ConditionsUnmet) as info:
        predict_f(A_REF, (2, 1, 2, 3, 2))  # p1 = q1 - p0
    assert any("p1 > q1 - p0" in f for f in info.value.failed)


def test_recessive_law_is_order_one_over_n():
    devs = []
    for n in (8, 16, 32):
        r = measured_ratio(A_REF, P, n, "f", 192)
        devs.append(abs(r - 1))
    assert devs[0] > devs[1] > devs[2]
    assert all(d * n < 8 for d, n in zip(devs, (8, 16, 32)))


def test_recessive_law_straight_seed_within_band():
    p = (6, 6, 6, 9, 9)
    for n in (8, 16):
        assert abs(measured_ratio(A_REF, p, n, "f", 192) - 1) <= 5 / n


def test_dominant_law_within_band():
    for n in (8, 16, 32):
        r = measured_ratio(A_REF, P, n, "g", 192)
        assert abs(r - 1) <= 5 / mpmath.sqrt(n)


def test_dominant_conditions():
    with pytest.raises(ConditionsUnmet):
        predict_g(A_REF, (2, 2, 2, 2, 4))
    with pytest.raises(TZero):
        predict_g((F(1, 2), F(1, 3), F(1, 5), F(3, 2), F(3)), P)
    assert t_vanishes((1, 2, 3, 4, F(1, 2)))


def test_dominant_sign_alternates_for_odd_parity():
    p = (3, 3, 3, 4, 5)
    with mpmath.workprec(128):
        pred = predict_g(A_REF, p)
        assert pred.growth_base < 0
        signs = []
        for n in (4, 5, 6, 7):
            pt = tuple(x + n * y for x, y in zip(A_REF, p))
            signs.append(mpmath.sign(g32_direct(pt, 128).value))
        assert signs[0] == -signs[1] == signs[2] == -signs[3]


def test_casoratian_example1():
    rec = casoratian_check(A_REF, EX1, 256)
    assert rec.relative_gap < mpmath.mpf(2) ** -64


def test_casoratian_near_balanced_index_one():
    a = (F(1, 2), F(1, 3), F(1, 5), F(2), F(1, 2) + F(1, 3) + F(1, 5) - 2 + 1 + F(1, 64))
    assert saalschutz_index(a) == 1 + F(1, 64)
    rec = casoratian_check(a, EX3, 256)
    assert mpmath.isfinite(rec.omega0_closed) and rec.relative_gap < mpmath.mpf(2) ** -64


def test_casoratian_at_s_equal_one():
    a = (F(1, 2), F(1, 3), F(1, 5), F(2), F(1, 2) + F(1, 3) + F(1, 5) - 1)
    assert saalschutz_index(a) == 1
    rec = casoratian_check(a, EX3, 256)
    assert rec.relative_gap < mpmath.mpf(2) ** -64


def test_casoratian_t_zero_flagged():
    rec = casoratian_check((F(1, 2), F(1, 3), F(1, 5), F(1, 2), F(7, 3)), EX1, 128)
    assert rec.singular and rec.omega0_measured is not None


def test_volume_deterministic_and_in_cone():
    a = cone_volume_fraction(100_000, rng_seed=3)
    b = cone_volume_fraction(100_000, rng_seed=3)
    assert a == b
    assert a.samples == 100_000 and a.in_cone == 1.0
    assert a.low <= a.fraction <= a.high


def test_volume_scale_invariance():
    a = cone_volume_fraction(200_000, rng_seed=5, q1=1.0)
    b = cone_volume_fraction(200_000, rng_seed=6, q1=2.0)
    assert abs(a.fraction - b.fraction) < 0.01
