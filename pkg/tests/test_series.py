import random
from fractions import Fraction

import mpmath
import pytest

from cf3f2.errors import Nonconvergent, PoleParameter, TransformPole
from cf3f2.params import saalschutz_index
from cf3f2.series import F32_direct, f32_direct, g32_direct, g_parameters, thomae_check
from cf3f2.verify import random_admissible

F = Fraction
A_REF = (F(1, 2), F(1, 3), F(1, 5), F(2), F(3))


def close(x, y, bits):
    return abs(x - y) <= abs(y) * mpmath.mpf(2) ** (-bits)


def test_zeta2():
    with mpmath.workprec(256):
        v = F32_direct((1, 1, 1, 2, 2), 256)
        assert close(v.value, mpmath.pi ** 2 / 6, 250)
        assert v.tail_bound < mpmath.mpf(2) ** -256 * abs(v.value)


def test_gauss_case():
    a, b, c = F(1, 3), F(1, 4), F(2)
    with mpmath.workprec(256):
        v = F32_direct((1, a, b, 1, c), 256).value
        ma, mb, mc = (mpmath.mpf(x.numerator) / x.denominator for x in (a, b, c))
        want = mpmath.gamma(mc) * mpmath.gamma(mc - ma - mb) / (mpmath.gamma(mc - ma) * mpmath.gamma(mc - mb))
        assert abs(v - want) < mpmath.mpf(10) ** -30


def test_watson_case():
    with mpmath.workprec(256):
        v = F32_direct((1, F(5, 6), F(4, 3), F(3, 2), F(11, 6)), 256).value
        want = mpmath.mpf(5) / 2 * mpmath.sqrt(3) * mpmath.log(2 + mpmath.sqrt(3))
        assert close(v, want, 240)


def test_against_mpmath_hyper():
    # fast-converging case where mpmath's own summation is reliable
    a = (F(1, 2), F(1, 3), F(1, 5), F(7, 2), F(9, 2))
    with mpmath.workprec(200):
        mine = F32_direct(a, 200).value
        ref = mpmath.hyp3f2(*(mpmath.mpf(x.numerator) / x.denominator for x in a), 1)
        assert close(mine, ref, 180)


def test_f_F_bridge():
    rng = random.Random(3)
    with mpmath.workprec(256):
        for _ in range(5):
            a = random_admissible(rng)
            v = [mpmath.mpf(x.numerator) / x.denominator for x in a]
            scale = mpmath.gamma(v[0]) * mpmath.gamma(v[1]) * mpmath.gamma(v[2]) / (mpmath.gamma(v[3]) * mpmath.gamma(v[4]))
            assert close(f32_direct(a, 256).value, scale * F32_direct(a, 256).value, 240)


def test_terminating_F():
    # 3F2(-2, 1, 1; 2, 2) = summed by hand: 1 - 1/2 + 1/9
    want = 1 + F(-2 * 1 * 1, 1 * 2 * 2) + F(-2 * -1 * 1 * 2 * 1 * 2, 2 * 2 * 3 * 2 * 3)
    with mpmath.workprec(128):
        v = F32_direct((-2, 1, 1, 2, 2), 128).value
        assert abs(v - mpmath.mpf(want.numerator) / want.denominator) < mpmath.mpf(2) ** -120


def test_errors():
    with pytest.raises(Nonconvergent):
        f32_direct((1, 1, 1, 1, 1), 128)
    with pytest.raises(PoleParameter):
        f32_direct((0, 1, 1, 2, 2), 128)
    with pytest.raises(PoleParameter):
        F32_direct((1, 1, 1, -1, 5), 128)


def test_g_parameters_preserve_index():
    import sympy as sp
    a = sp.symbols("a0 a1 a2 b1 b2")
    assert sp.expand(saalschutz_index(g_parameters(a)) - saalschutz_index(a)) == 0


def test_g_finite():
    v = g32_direct((F(1, 2), F(1, 3), F(1, 5), F(3), F(4)), 256).value
    assert mpmath.isfinite(v) and v != 0


def test_g_transform_pole():
    with pytest.raises(TransformPole):
        g32_direct((F(1), F(1, 3), F(1, 5), F(2), F(7, 2)), 128)


def test_thomae_reference_points():
    assert thomae_check(A_REF, 256) < mpmath.mpf(2) ** -128
    assert thomae_check((1, 1, 1, 2, 2), 256) < mpmath.mpf(2) ** -128
    with pytest.raises(PoleParameter):
        thomae_check((F(3), F(1, 3), F(1, 5), F(2), F(9, 2)), 128)


def test_precision_doubling_is_stable():
    for a in (A_REF, (1, 1, 1, 2, 2), (F(5, 6), F(4, 3), F(1), F(3, 2), F(11, 6))):
        lo = f32_direct(a, 128).value
        with mpmath.workprec(256):
            hi = f32_direct(a, 256).value
            assert abs(lo - hi) <= abs(hi) * mpmath.mpf(2) ** -120


def test_tail_bound_soundness():
    rng = random.Random(17)
    for _ in range(100):
        a = random_admissible(rng, s_range=(F(1, 4), F(4)))
        sv = f32_direct(a, 96)
        with mpmath.workprec(192):
            ref = f32_direct(a, 192).value
            err = abs(sv.value - ref)
            assert err <= sv.tail_bound + abs(ref) * mpmath.mpf(2) ** -94, a
        assert sv.tail_bound < abs(sv.value) * mpmath.mpf(2) ** -90


def test_complex_parameters():
    from cf3f2.scalars import gaussian
    a = (gaussian(F(1, 2), F(1, 3)), F(1, 3), F(1, 5), F(2), F(3))
    with mpmath.workprec(128):
        v = f32_direct(a, 128).value
        assert isinstance(v, mpmath.mpc)
        assert thomae_check(a, 128) < mpmath.mpf(2) ** -100 * abs(v)
