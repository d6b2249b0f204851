"""Direct high-precision summation of 3f2(1), 3F2(1) and the companion 3g2(1).

The renormalized series

    f(a) = sum_j Gamma(a0+j) Gamma(a1+j) Gamma(a2+j) / (j! Gamma(b1+j) Gamma(b2+j))

converges like sum j^{-s-1}, far too slowly to sum naively at hundreds of
bits.  We sum the first N terms directly and add the tail sum_{j>=N} t_j
from the asymptotic expansion of the gamma ratio,

    t_j = j^{-s-1} (1 + c_1/j + c_2/j^2 + ...),

whose coefficients come from the Stirling series of log Gamma.  Each
power sum sum_{j>=N} j^{-s-1-m} is a Hurwitz zeta value, evaluated by
Euler-Maclaurin at the same N.  The returned tail_bound is an a-posteriori
estimate: the size of the last retained terms of both expansions plus the
rounding allowance.
"""

from dataclasses import dataclass
from math import comb

import mpmath

from .errors import Nonconvergent, PoleParameter, TransformPole
from .params import ParameterVector, saalschutz_index
from .scalars import is_nonpositive_integer, to_mp


@dataclass(frozen=True)
class SeriesValue:
    value: object
    precision_bits: int
    terms_used: int
    tail_bound: object


def _as_mp_params(a):
    if isinstance(a, ParameterVector):
        a = tuple(a)
    return [to_mp(x) for x in a]


def _start_index(lo):
    j0 = 0
    for b in lo:
        if is_nonpositive_integer(b):
            j0 = max(j0, int(1 - mpmath.re(b)))
    return j0


def _bernoulli_table(n):
    return [mpmath.bernoulli(k) for k in range(n + 1)]


def _hurwitz_em(sig, N, eps, bern):
    """sum_{j>=N} j^{-sig} by Euler-Maclaurin; returns None if the series stops improving."""
    base = mpmath.power(N, -sig)
    z = N * base / (sig - 1) + base / 2
    poch = sig
    pw = base / N
    prev = None
    fact = mpmath.mpf(2)
    for k in range(1, len(bern) // 2):
        term = bern[2 * k] / fact * poch * pw
        if prev is not None and abs(term) > abs(prev):
            return None
        z += term
        if abs(term) <= eps * abs(z):
            return z
        prev = term
        poch *= (sig + 2 * k - 1) * (sig + 2 * k)
        pw /= N * N
        fact *= (2 * k + 1) * (2 * k + 2)
    return None


def _tail(up, lo, s, N, eps, max_terms):
    """sum_{j>=N} Gamma(a0+j)Gamma(a1+j)Gamma(a2+j)/(Gamma(1+j)Gamma(b1+j)Gamma(b2+j))."""
    bern = _bernoulli_table(max_terms + 2)
    # power sums P_r = sum alpha^r - sum beta^r over upper (a) and lower (1, b) parameters
    lower = [mpmath.mpf(1)] + list(lo)
    P = []
    pu = [mpmath.mpf(1)] * 3
    pl = [mpmath.mpf(1)] * 3
    for _ in range(max_terms + 2):
        P.append(sum(pu) - sum(pl))
        pu = [x * y for x, y in zip(pu, up)]
        pl = [x * y for x, y in zip(pl, lower)]
    d = [0]
    c = [mpmath.mpf(1)]
    total = 0
    small = 0
    last = []
    for m in range(max_terms + 1):
        if m > 0:
            n = m + 1
            dm = sum(comb(n, k) * bern[k] * P[n - k] for k in range(n + 1)) / (m * (m + 1))
            d.append(dm if m % 2 == 1 else -dm)
            c.append(sum(k * d[k] * c[m - k] for k in range(1, m + 1)) / m)
        zeta = _hurwitz_em(s + 1 + m, N, eps, bern)
        if zeta is None:
            return None
        term = c[m] * zeta
        total += term
        last.append(abs(term))
        if abs(term) <= eps * max(abs(total), eps):
            small += 1
            if small >= 3:
                return total, sum(last[-4:])
        else:
            small = 0
    return None


def _sum_f(up, lo, precision_bits):
    """Sum the f-normalized series; returns (value, N, tail_estimate, cancellation_bits)."""
    s = sum(lo) - sum(up)
    j0 = _start_index(lo)
    big = max([abs(x) for x in up + lo] + [abs(s)]) + 1
    N = int(max(64, 8 * big, precision_bits // 2)) + j0
    eps = mpmath.mpf(2) ** (-precision_bits - 10)
    while True:
        t = mpmath.fprod(mpmath.gamma(x + j0) for x in up) * mpmath.rgamma(1 + j0) \
            * mpmath.rgamma(lo[0] + j0) * mpmath.rgamma(lo[1] + j0)
        S = 0
        peak = abs(t)
        for j in range(j0, N):
            S += t
            t = t * (up[0] + j) * (up[1] + j) * (up[2] + j) / ((j + 1) * (lo[0] + j) * (lo[1] + j))
            if abs(t) > peak:
                peak = abs(t)
        tail = _tail(up, lo, s, mpmath.mpf(N), eps, precision_bits // 2 + 40)
        if tail is not None:
            T, est = tail
            value = S + T
            mag = abs(value)
            cancel = 0 if mag == 0 else max(0, int(mpmath.log(peak / mag, 2)))
            return value, N, est, cancel
        N *= 2


def _check_convergent(s):
    if mpmath.re(s) <= 0:
        raise Nonconvergent(f"Re s(a) = {mpmath.nstr(mpmath.re(s), 8)} <= 0: the series diverges at unit argument")


def f32_direct(a, precision_bits=256):
    """3f2(a) at unit argument to ``precision_bits`` bits."""
    if _all_exactable(a):
        a = ParameterVector.of(a)
    for name, x in zip(("a0", "a1", "a2"), tuple(a)[:3]):
        if is_nonpositive_integer(x):
            raise PoleParameter(f"{name} is a nonpositive integer: Gamma({name}) has a pole")
    # guard bits cover rounding in N terms plus any cancellation in the sum
    guard = 40
    while True:
        with mpmath.workprec(precision_bits + guard + 16):
            vals = _as_mp_params(a)
            up, lo = vals[:3], vals[3:]
            _check_convergent(sum(lo) - sum(up))
            value, N, est, cancel = _sum_f(up, lo, precision_bits + guard)
        needed = 24 + cancel + N.bit_length()
        if needed <= guard:
            break
        guard = needed + 8
    with mpmath.workprec(precision_bits + guard):
        tail_bound = est + abs(value) * mpmath.mpf(2) ** (-precision_bits - 12)
    return SeriesValue(value, precision_bits, N, tail_bound)


def _all_exactable(a):
    from .scalars import is_gaussian
    from fractions import Fraction
    return all(isinstance(x, (int, Fraction, str)) or is_gaussian(x) for x in a)


def F32_direct(a, precision_bits=256):
    """3F2(a) at unit argument (Pochhammer normalization).

    A nonpositive-integer upper parameter terminates the series, which is
    then summed exactly in floating form.
    """
    a = ParameterVector.of(a) if _all_exactable(a) else a
    params = tuple(a)
    for name, b in zip(("b1", "b2"), params[3:]):
        if is_nonpositive_integer(b):
            raise PoleParameter(f"{name} is a nonpositive integer: 3F2 has a pole")
    terminating = [x for x in params[:3] if is_nonpositive_integer(x)]
    if terminating:
        with mpmath.workprec(precision_bits + 30):
            vals = _as_mp_params(params)
            up, lo = vals[:3], vals[3:]
            stop = int(-max(mpmath.re(to_mp(x)) for x in terminating))
            t = mpmath.mpf(1)
            S = 0
            for j in range(stop + 1):
                S += t
                t = t * (up[0] + j) * (up[1] + j) * (up[2] + j) / ((j + 1) * (lo[0] + j) * (lo[1] + j))
        return SeriesValue(S, precision_bits, stop + 1, mpmath.mpf(0))
    fv = f32_direct(a, precision_bits)
    with mpmath.workprec(precision_bits + 30):
        vals = _as_mp_params(params)
        scale = mpmath.gamma(vals[3]) * mpmath.gamma(vals[4]) / mpmath.fprod(mpmath.gamma(x) for x in vals[:3])
        return SeriesValue(fv.value * scale, precision_bits, fv.terms_used, fv.tail_bound * abs(scale))


def g_parameters(a):
    """(a0, a0-b1+1, a0-b2+1; a0-a1+1, a0-a2+1)."""
    a0, a1, a2, b1, b2 = tuple(a)
    return (a0, a0 - b1 + 1, a0 - b2 + 1, a0 - a1 + 1, a0 - a2 + 1)


def g32_direct(a, precision_bits=256):
    """Companion series 3g2(a) = 3f2 of the transformed vector."""
    if _all_exactable(a):
        a = ParameterVector.of(a)
    t = g_parameters(a)
    for name, x in (("a0-b1+1", t[1]), ("a0-b2+1", t[2])):
        if is_nonpositive_integer(x):
            raise TransformPole(f"{name} is a nonpositive integer")
    return f32_direct(t, precision_bits)


def thomae_parameters(a):
    a0, a1, a2, b1, b2 = tuple(a)
    s = saalschutz_index(a)
    return (s, b1 - a0, b2 - a0, s + a1, s + a2)


def thomae_check(a, precision_bits=256):
    """|f(a) - Gamma(a1)Gamma(a2)/(Gamma(b1-a0)Gamma(b2-a0)) f(s, b1-a0, b2-a0; s+a1, s+a2)|."""
    if _all_exactable(a):
        a = ParameterVector.of(a)
    a0, a1, a2, b1, b2 = tuple(a)
    for name, x in (("b1-a0", b1 - a0), ("b2-a0", b2 - a0)):
        if is_nonpositive_integer(x):
            raise PoleParameter(f"{name} is a nonpositive integer")
    lhs = f32_direct(a, precision_bits).value
    rhs_series = f32_direct(thomae_parameters(a), precision_bits).value
    with mpmath.workprec(precision_bits + 30):
        v = _as_mp_params(a)
        pref = mpmath.gamma(v[1]) * mpmath.gamma(v[2]) * mpmath.rgamma(v[3] - v[0]) * mpmath.rgamma(v[4] - v[0])
        return abs(lhs - pref * rhs_series)
