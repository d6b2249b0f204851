"""Numerical checks of the asymptotic laws behind the error model.

* recessive law:  f(a+np) ~ Gamma(s) s2(p)^{-s} n^{-2s}
* dominant law:   t(a) g(a+np) ~ B(a;p) D(p)^n n^{-s-1/2}
* Casoratian:     f(a)g(a+k) - f(a+k)g(a) in closed form
* Monte Carlo share of the cone slice where the dominant law is proved.
"""

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .constants import D
from .contiguous import rho_eval
from .errors import ConditionsUnmet, TZero
from .params import cone_check, s2, saalschutz_index
from .scalars import is_nonpositive_integer, to_mp
from .series import f32_direct, g32_direct


@dataclass(frozen=True)
class AsymptoticPrediction:
    leading_constant: object
    growth_base: object
    power: object
    kind: str

    def value(self, n):
        return self.leading_constant * mpmath.power(self.growth_base, n) * mpmath.power(n, self.power)


def _s(a):
    return saalschutz_index([to_mp(x) for x in a])


def predict_f(a, p):
    """Recessive asymptotics of f(a + n p)."""
    p0, p1, p2, q1, q2 = p
    failed = []
    if saalschutz_index(p) != 0:
        failed.append("s(p) = 0")
    if not (p1 > q1 - p0 > 0):
        failed.append("p1 > q1 - p0 > 0")
    if not (p2 > q2 - p0 > 0):
        failed.append("p2 > q2 - p0 > 0")
    s = _s(a)
    if mpmath.re(s) <= 0:
        failed.append("Re s(a) > 0")
    if failed:
        raise ConditionsUnmet("recessive law does not apply: " + "; ".join(failed), failed)
    return AsymptoticPrediction(mpmath.gamma(s) * mpmath.power(s2(p), -s), mpmath.mpf(1), -2 * s, "recessive-f")


def t_factor(a):
    """sin pi(b1-a0) * sin pi(b2-a0)."""
    v = [to_mp(x) for x in a]
    return mpmath.sinpi(v[3] - v[0]) * mpmath.sinpi(v[4] - v[0])


def t_vanishes(a):
    a = tuple(a)
    return any(is_nonpositive_integer(x) or is_nonpositive_integer(-x) for x in (a[3] - a[0], a[4] - a[0]))


def B_constant(a, p):
    """pi^{1/2} prod p_i^{a_i-1/2} s2(p)^{s-1} / (2^{3/2} prod (q_j-p_i)^{b_j-a_i-1/2})."""
    v = [to_mp(x) for x in a]
    s = saalschutz_index(v)
    half = mpmath.mpf(1) / 2
    num = mpmath.sqrt(mpmath.pi) * mpmath.power(s2(p), s - 1)
    for i in range(3):
        num *= mpmath.power(p[i], v[i] - half)
    den = mpmath.power(2, 3 * half)
    for i in range(3):
        for j in (3, 4):
            den *= mpmath.power(p[j] - p[i], v[j] - v[i] - half)
    return num / den


def predict_g(a, p):
    """Dominant asymptotics of g(a + n p)."""
    c = cone_check(p)
    failed = []
    if not c.in_SZ:
        failed.append("p in S(Z)")
    if not (c.cond_a or c.cond_b):
        failed.append("Delta(p) <= 0 or 2q1^2 - 2(p1+p2)q1 + p1p2 >= 0")
    if failed:
        raise ConditionsUnmet("dominant law does not apply: " + "; ".join(failed), failed)
    if t_vanishes(a):
        raise TZero("t(a) = sin pi(b1-a0) sin pi(b2-a0) vanishes")
    const = B_constant(a, p) / t_factor(a)
    return AsymptoticPrediction(const, to_mp(D(p)), -_s(a) - mpmath.mpf(1) / 2, "dominant-g")


def measured_ratio(a, p, n, kind, precision_bits=256):
    """Measured value at a + n p divided by the prediction."""
    point = tuple(x + n * y for x, y in zip(tuple(a), p))
    with mpmath.workprec(precision_bits):
        if kind == "f":
            pred = predict_f(a, p)
            val = f32_direct(point, precision_bits).value
        else:
            pred = predict_g(a, p)
            val = g32_direct(point, precision_bits).value
        return val / pred.value(n)


@dataclass(frozen=True)
class CasoratianRecord:
    omega0_measured: object
    omega0_closed: object
    relative_gap: object

    @property
    def singular(self):
        return self.omega0_closed is None


def casoratian_closed(a, k):
    """pi^2 rho(a;k) Gamma(a0)Gamma(a1)Gamma(a2)Gamma(s) / (t(a) prod Gamma(b_j-a_i+(l_j-k_i)_+))."""
    if t_vanishes(a):
        raise TZero("t(a) vanishes")
    v = [to_mp(x) for x in a]
    s = saalschutz_index(v)
    num = mpmath.pi ** 2 * to_mp(rho_eval(a, k)) * mpmath.gamma(v[0]) * mpmath.gamma(v[1]) \
        * mpmath.gamma(v[2]) * mpmath.gamma(s)
    den = t_factor(a)
    for i in range(3):
        for j in (3, 4):
            den *= mpmath.gamma(v[j] - v[i] + max(k[j] - k[i], 0))
    return num / den


def casoratian_check(a, seed, precision_bits=256):
    """Measured omega(0) = f(a)g(a+k) - f(a+k)g(a) against its closed form."""
    a = tuple(a)
    k = seed.k if hasattr(seed, "k") else tuple(seed)
    ak = tuple(x + y for x, y in zip(a, k))
    with mpmath.workprec(precision_bits + 20):
        fa = f32_direct(a, precision_bits).value
        fk = f32_direct(ak, precision_bits).value
        ga = g32_direct(a, precision_bits).value
        gk = g32_direct(ak, precision_bits).value
        measured = fa * gk - fk * ga
        try:
            closed = casoratian_closed(a, k)
        except TZero:
            return CasoratianRecord(measured, None, None)
        gap = abs(measured - closed) / abs(closed)
        return CasoratianRecord(measured, closed, gap)


# ---------------------------------------------------------------------------
# cone volume


@dataclass(frozen=True)
class VolumeEstimate:
    fraction: float
    samples: int
    low: float
    high: float
    drawn: int
    in_cone: float


def _wilson(successes, n, z=1.959963984540054):
    phat = successes / n
    denom = 1 + z * z / n
    centre = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    return centre - half, centre + half


def _slice_mask(p0, p1, p2, q1):
    q2 = p0 + p1 + p2 - q1
    return (p1 <= p0) & (p2 <= p0) & (p0 < q1) & (q1 <= q2) & (q2 < p1 + p2), q2


def _conditions(p0, p1, p2, q1, q2):
    e1 = p0 + p1 + p2
    e2 = p0 * p1 + p1 * p2 + p2 * p0 + q1 * q2
    e3 = p0 * p1 * p2
    delta = e1 ** 2 * e2 ** 2 + 18 * e1 * e2 * e3 - 2 * e2 ** 3 - 8 * e1 ** 3 * e3 - 27 * e3 ** 2
    cond_b = 2 * q1 * q1 - 2 * (p1 + p2) * q1 + p1 * p2
    return (delta <= 0) | (cond_b >= 0)


def cone_volume_fraction(samples=1_000_000, rng_seed=0, q1=1.0, batch=1_000_000):
    """Share of the slice S(R) with q1 fixed where (a) or (b) holds.

    Points (p0, p1, p2) are drawn uniformly from the box [0, q1]^3 and
    rejected unless they lie in the slice (q2 = p0+p1+p2-q1 by balance);
    ``samples`` counts accepted points.  Batches use seeds spawned from
    ``rng_seed``, so the result is deterministic.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    root = np.random.SeedSequence(rng_seed)
    hits = 0
    accepted = 0
    drawn = 0
    inside = 0
    while accepted < samples:
        (child,) = root.spawn(1)
        rng = np.random.default_rng(child)
        x = rng.random((batch, 3)) * q1
        p0, p1, p2 = x[:, 0], x[:, 1], x[:, 2]
        mask, q2 = _slice_mask(p0, p1, p2, q1)
        drawn += batch
        idx = np.flatnonzero(mask)[: samples - accepted]
        p0, p1, p2, q2 = p0[idx], p1[idx], p2[idx], q2[idx]
        # sanity: every accepted point satisfies the cone inequalities and balance
        inside += int(np.count_nonzero((p1 <= p0) & (p2 <= p0) & (p0 < q1) & (q1 <= q2) & (q2 < p1 + p2)
                                       & np.isclose(p0 + p1 + p2, q1 + q2)))
        hits += int(np.count_nonzero(_conditions(p0, p1, p2, q1, q2)))
        accepted += len(idx)
    low, high = _wilson(hits, accepted)
    return VolumeEstimate(hits / accepted, accepted, low, high, drawn, inside / accepted)
