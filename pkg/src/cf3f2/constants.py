"""Growth bases and error-constant factors of the continued fractions."""

from fractions import Fraction

import mpmath

from .errors import PoleParameter
from .params import s2, saalschutz_index
from .scalars import is_nonpositive_integer, to_mp


def _ipow(base, exp):
    """base**exp for integers with 0**0 = 1, as an exact rational."""
    if exp == 0:
        return Fraction(1)
    return Fraction(base) ** exp


def D(p):
    """(-1)^{q1+q2} prod p_i^{p_i} / prod_{i,j} (q_j-p_i)^{q_j-p_i}, exact."""
    p0, p1, p2, q1, q2 = (int(x) for x in p)
    num = _ipow(p0, p0) * _ipow(p1, p1) * _ipow(p2, p2)
    den = Fraction(1)
    for q in (q1, q2):
        for pi in (p0, p1, p2):
            den *= _ipow(q - pi, q - pi)
    sign = -1 if (q1 + q2) % 2 else 1
    return sign * num / den


def E(l1, l2):
    """(-l1-l2)^{l1+l2} / ((2l1-l2)^{2l1-l2} (2l2-l1)^{2l2-l1}), exact."""
    l1, l2 = int(l1), int(l2)
    return _ipow(-l1 - l2, l1 + l2) / (_ipow(2 * l1 - l2, 2 * l1 - l2) * _ipow(2 * l2 - l1, 2 * l2 - l1))


def _mp(a):
    return [to_mp(x) for x in a]


def _gamma(x, label):
    if is_nonpositive_integer(x):
        raise PoleParameter(f"Gamma({label}) has a pole")
    return mpmath.gamma(x)


def e_straight(a, k):
    """(2 pi)^{3/2} prod (l_j-k_i)^{2(l_j-k_i)+b_j-a_i-1/2} / (s2(k)^{2s-1} prod k_i^{2k_i+a_i-1/2})."""
    v = _mp(a)
    s = saalschutz_index(v)
    half = mpmath.mpf(1) / 2
    num = (2 * mpmath.pi) ** (3 * half)
    for i in range(3):
        for j in (3, 4):
            m = k[j] - k[i]
            num *= mpmath.power(m, 2 * m + v[j] - v[i] - half)
    den = mpmath.power(s2(k), 2 * s - 1)
    for i in range(3):
        den *= mpmath.power(k[i], 2 * k[i] + v[i] - half)
    return num / den


def e_twisted(a, k):
    l1, l2 = k[3], k[4]
    v = _mp(a)
    s = saalschutz_index(v)
    a0, a1, a2, b1, b2 = v
    half = mpmath.mpf(1) / 2
    x, y = 2 * l1 - l2, 2 * l2 - l1
    num = (2 * mpmath.pi) ** (3 * half) * mpmath.power(x, 2 * x + 2 * b1 - b2 + s - 3 * half) \
        * mpmath.power(y, 2 * y + 2 * b2 - b1 + s - 3 * half)
    den = mpmath.power(3, s - half) * mpmath.power(l1 + l2, 2 * (l1 + l2) + a0 + a1 + a2 - 3 * half) \
        * mpmath.power(l1 * l1 - l1 * l2 + l2 * l2, 2 * s - 1)
    return num / den


def _lower_gammas(v, k):
    out = mpmath.mpf(1)
    for i in range(3):
        for j in (3, 4):
            arg = v[j] - v[i] + max(k[j] - k[i], 0)
            out *= _gamma(arg, f"b{j - 2}-a{i}+(l{j - 2}-k{i})+")
    return out


def gamma_factor(a, k):
    """Gamma(a0)Gamma(a1)Gamma(a2)Gamma(s)^2 / prod Gamma(b_j-a_i+(l_j-k_i)_+)."""
    v = _mp(a)
    s = saalschutz_index(v)
    num = _gamma(v[0], "a0") * _gamma(v[1], "a1") * _gamma(v[2], "a2") * _gamma(s, "s") ** 2
    return num / _lower_gammas(v, k)


def gamma_star(a, k):
    """The F-normalized analogue of gamma_factor."""
    v = _mp(a)
    s = saalschutz_index(v)
    num = _gamma(v[3] + k[3], "b1+l1") * _gamma(v[4] + k[4], "b2+l2") * _gamma(v[3], "b1") \
        * _gamma(v[4], "b2") * _gamma(s, "s") ** 2
    den = _gamma(v[0] + k[0], "a0+k0") * _gamma(v[1] + k[1], "a1+k1") * _gamma(v[2] + k[2], "a2+k2")
    return num / (den * _lower_gammas(v, k))


def gamma_hat(target, k, lam):
    """Gamma factor of the lambda-th specialization, with the pole cancellation done by hand.

    ``target`` is (a_mu, a_nu, b1, b2) of the value 3F2(k_lam, a_mu, a_nu; b1, b2).
    """
    mu, nu = [i for i in range(3) if i != lam]
    am, an, b1, b2 = _mp(target)
    b = {3: b1, 4: b2}
    kl = k[lam]
    s = b1 + b2 - am - an - kl
    num = _gamma(b1, "b1") * _gamma(b2, "b2") * _gamma(s, "s") ** 2
    den = _gamma(kl, "k_lambda") * _gamma(am, "a_mu") * _gamma(an, "a_nu")
    for j in (3, 4):
        den *= mpmath.rf(b[j] - k[j], max(k[j] - kl, 0))
    for i, ai in ((mu, am), (nu, an)):
        for j in (3, 4):
            den *= _gamma(b[j] - ai + max(k[i] - k[j], 0), f"b{j - 2}-a{i}")
    return num / den


def ete_constant(a1, a2, b1, b2):
    """C(a1, a2; b1, b2) = pi^{3/2} Gamma(b1)Gamma(b2)Gamma(s)^2 / (Gamma(a1)Gamma(a2) prod Gamma(b_j-a_i))."""
    a1, a2, b1, b2 = _mp((a1, a2, b1, b2))
    s = b1 + b2 - a1 - a2 - 1
    num = mpmath.pi ** (mpmath.mpf(3) / 2) * mpmath.gamma(b1) * mpmath.gamma(b2) * mpmath.gamma(s) ** 2
    den = mpmath.gamma(a1) * mpmath.gamma(a2)
    for b in (b1, b2):
        for x in (a1, a2):
            den *= mpmath.gamma(b - x)
    return num / den
