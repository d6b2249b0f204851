"""Continued fractions generated by the contiguous relations.

The fraction K_{j>=0} r(j)/q(j) = r(0)/(q(0) + r(1)/(q(1) + ...)) is read off
three interleaved relations.  With j_0 = 0, j_1 = k, j_2 = l and the point

    P(n) = a + (n // 3) p + j_{n mod 3},

the n-th relation is f(P(n)) = q(n) f(P(n+1)) + r(n+1) f(P(n+2)), so that
(q(n), r(n+1)) are the u, v coefficients at P(n) for the shifts
P(n+1) - P(n) and P(n+2) - P(n).  In f-normalization r(0) = 1 and the
fraction converges to f(a+k)/f(a).
"""

from dataclasses import dataclass, field

import mpmath

from .constants import D, E, e_straight, e_twisted, gamma_factor, gamma_hat, gamma_star
from .contiguous import f_head_raw, rho_eval, uv_raw
from .errors import (ConditionsUnmet, DegenerateCoefficient, DegenerateRelation, NotWellDefined,
                     PoleParameter, SpecializationPole)
from .limits import SINGULAR, limit_value
from .params import ParameterVector, SeedVector, saalschutz_index, twisted_ok
from .scalars import is_nonpositive_integer, pochhammer, to_mp
from .series import F32_direct, f32_direct

NORMALIZATIONS = ("f", "F", "specialized")


def _vadd(x, y, n=1):
    return tuple(p + n * q for p, q in zip(x, y))


def _vsub(x, y):
    return tuple(p - q for p, q in zip(x, y))


class CFModel:
    """Coefficient stream of one continued fraction, with an exact coefficient cache.

    ``normalization`` is ``"f"`` (ratio f(a+k)/f(a)), ``"F"`` (ratio
    F(a+k)/F(a)) or ``"specialized"``; the latter evaluates the single value
    3F2(k_lam, a_mu, a_nu; b1, b2) and its base point is the shifted point
    with a_lam = 0.
    """

    def __init__(self, seed, base_point, normalization="f", lam=None):
        if normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization {normalization!r}")
        self.seed = seed
        self.base_point = base_point if isinstance(base_point, ParameterVector) else ParameterVector.of(base_point)
        self.normalization = normalization
        self.lam = lam
        self._q = {}
        self._r = {}
        k = seed.k
        self._offsets = (tuple([0] * 5), k, seed.l)
        self._p = seed.p
        # relation n mod 3 uses shifts (sigma^i k, sigma^i k + sigma^{i+1} k)
        sk = seed.sigma(k)
        ssk = seed.sigma(sk)
        self._shifts = ((k, sk), (sk, ssk), (ssk, k))
        self._mask = None
        if normalization == "specialized":
            self._mask = tuple(i != lam for i in range(5))
        if normalization in ("F", "specialized"):
            b = self.base_point
            for name, x in (("b1", b.b1), ("b2", b.b2)):
                if is_nonpositive_integer(x) and normalization == "F":
                    raise PoleParameter(f"{name} is a nonpositive integer")

    # construction helpers -------------------------------------------------

    @classmethod
    def specialized(cls, seed, lam, target):
        """CF for 3F2(k_lam, a_mu, a_nu; b1, b2) with target = (a_mu, a_nu, b1, b2)."""
        k = seed.k
        if not 0 <= lam <= 2 or k[lam] <= 0:
            raise ValueError("specialization needs an index lam with k_lam > 0")
        target = ParameterVector.of(list(target) + [0])  # homogenize types
        am, an, b1, b2 = tuple(target)[:4]
        mu, nu = [i for i in range(3) if i != lam]
        base = [0] * 5
        base[lam] = 0
        base[mu] = am - k[mu]
        base[nu] = an - k[nu]
        base[3] = b1 - k[3]
        base[4] = b2 - k[4]
        model = cls(seed, ParameterVector.of(base), "specialized", lam)
        model.target = (am, an, b1, b2)
        return model

    # points and coefficients ---------------------------------------------

    def point(self, n):
        m, i = divmod(n, 3)
        return _vadd(_vadd(tuple(self.base_point), self._p, m), self._offsets[i])

    def _uv_at(self, n):
        k_, lk = self._shifts[n % 3]
        pt = self.point(n)
        try:
            return uv_raw(pt, k_, lk)
        except SINGULAR:
            pass
        try:
            return limit_value(lambda x: uv_raw(x, k_, lk), pt, mask=self._mask, n=n)
        except DegenerateCoefficient as exc:
            raise DegenerateCoefficient(f"coefficient {n}: {exc}", n=n) from None

    def _head(self):
        """(q(0), r(0), r(1)) for the model's normalization."""
        k, lk = self.seed.k, self.seed.sigma(self.seed.k)
        pt = tuple(self.base_point)
        if self.normalization == "f":
            q0, r1 = self._uv_at(0)
            return q0, 1, r1

        def head(x):
            q, r1 = f_head_raw(x, k, lk)
            r0 = pochhammer(x[3], k[3]) * pochhammer(x[4], k[4])
            if self.normalization == "specialized":
                if r0 == 0:
                    raise ZeroDivisionError("r(0) vanishes")
                return q / r0, r1 / r0
            return q, r0, r1

        try:
            out = limit_value(head, pt, mask=self._mask, what="head coefficient", n=0)
        except DegenerateCoefficient as exc:
            if self.normalization == "specialized":
                raise SpecializationPole(str(exc)) from None
            raise
        if self.normalization == "specialized":
            return out[0], 1, out[1]
        return out

    def coefficient(self, n):
        """Exact (q(n), r(n))."""
        if n not in self._q:
            self.coefficient_stream(n)
        return self._q[n], self._r[n]

    def coefficient_stream(self, n_max):
        """Fill the cache for all indices up to n_max and return the (q, r) lists."""
        if 0 not in self._q:
            q0, r0, r1 = self._head()
            self._q[0], self._r[0], self._r[1] = q0, r0, r1
            if r1 == 0:
                raise NotWellDefined("r(1) vanishes", n=1)
        n = 1
        while n <= n_max:
            if n not in self._q:
                q, r_next = self._uv_at(n)
                if r_next == 0:
                    raise NotWellDefined(f"r({n + 1}) vanishes", n=n + 1)
                self._q[n] = q
                self._r[n + 1] = r_next
            n += 1
        return [self._q[j] for j in range(n_max + 1)], [self._r[j] for j in range(n_max + 1)]

    @property
    def s(self):
        return saalschutz_index(tuple(self.base_point))

    def target_value(self, precision_bits=256):
        """Independent direct-sum value the fraction should converge to."""
        a = tuple(self.base_point)
        ak = _vadd(a, self.seed.k)
        if self.normalization == "f":
            return f32_direct(ak, precision_bits).value / f32_direct(a, precision_bits).value
        if self.normalization == "F":
            return F32_direct(ak, precision_bits).value / F32_direct(a, precision_bits).value
        am, an, b1, b2 = self.target
        vals = [0, 0, 0, b1, b2]
        mu, nu = [i for i in range(3) if i != self.lam]
        vals[self.lam], vals[mu], vals[nu] = self.seed.k[self.lam], am, an
        return F32_direct(vals, precision_bits).value


def to_F_normalization(model):
    if model.normalization != "f":
        raise ValueError("only f-normalized models can be rescaled")
    return CFModel(model.seed, model.base_point, "F")


def specialize(model, lam):
    """The lam-th specialization: the value 3F2(k_lam, a_mu, a_nu; b1, b2) with targets read off the model."""
    a = tuple(model.base_point)
    mu, nu = [i for i in range(3) if i != lam]
    return CFModel.specialized(model.seed, lam, (a[mu], a[nu], a[3], a[4]))


# ---------------------------------------------------------------------------
# convergents


@dataclass
class Convergents:
    approximants: list = field(default_factory=list)  # (n, value)
    terminal_status: str = "exhausted"
    status_n: int = None
    zero_denominators: list = field(default_factory=list)
    tol: object = None

    @property
    def value(self):
        return self.approximants[-1][1]

    @property
    def n(self):
        return self.approximants[-1][0]


_RESCALE = mpmath.mpf(2) ** 512


def convergents(model, n_max, tol, precision_bits=256, error_model=None, n_min=0):
    """Approximants K_{j=0}^n r(j)/q(j) by the forward three-term recurrence.

    With h_n = A_n/B_n the approximants of q(0) + r(1)/(q(1) + ...), the
    fraction's value is r(0) B_n / A_n.  A vanishing A_n is reported and
    skipped.  Stops once two successive approximants differ by less than
    ``tol`` and (when an error model is given) the predicted error is below
    ``tol`` as well.
    """
    tol = mpmath.mpf(tol)
    out = Convergents(tol=tol)
    with mpmath.workprec(precision_bits):
        try:
            q0, r0 = model.coefficient(0)
        except (DegenerateCoefficient, DegenerateRelation) as exc:
            out.terminal_status = "degenerate"
            out.status_n = getattr(exc, "n", 0) or 0
            out.message = str(exc)
            return out
        r0 = to_mp(r0)
        A_prev, A = mpmath.mpf(1), to_mp(q0)
        B_prev, B = mpmath.mpf(0), mpmath.mpf(1)
        prev = None
        for n in range(0, n_max + 1):
            if n > 0:
                try:
                    q, r = model.coefficient(n)
                except (DegenerateCoefficient, DegenerateRelation) as exc:
                    out.terminal_status = "degenerate"
                    out.status_n = n
                    out.message = str(exc)
                    return out
                q, r = to_mp(q), to_mp(r)
                A_prev, A = A, q * A + r * A_prev
                B_prev, B = B, q * B + r * B_prev
                if abs(A) > _RESCALE:
                    A, A_prev, B, B_prev = A / _RESCALE, A_prev / _RESCALE, B / _RESCALE, B_prev / _RESCALE
            if A == 0:
                out.zero_denominators.append(n)
                continue
            x = r0 * B / A
            out.approximants.append((n, x))
            if prev is not None and n >= n_min and abs(x - prev) < tol:
                if error_model is None or abs(predicted_error(error_model, n)) < tol:
                    out.terminal_status = "converged"
                    out.status_n = n
                    return out
            prev = x
    out.status_n = n_max
    return out


def backward_value(model, n, precision_bits=256):
    """K_{j=0}^n r(j)/q(j) evaluated tail to head (cross-check of the forward recurrence)."""
    with mpmath.workprec(precision_bits):
        qs, rs = model.coefficient_stream(n)
        t = to_mp(qs[n])
        for j in range(n - 1, -1, -1):
            t = to_mp(qs[j]) + to_mp(rs[j + 1]) / t
        return to_mp(rs[0]) / t


# ---------------------------------------------------------------------------
# error model


@dataclass(frozen=True)
class ErrorModel:
    base: object
    constant: object
    exponent: object
    normalization: str
    kind: str
    reliable: bool = True


def predicted_error(em, n):
    """constant * base^{-n} * n^{1/2 - s}."""
    if n < 1:
        raise ValueError("predicted error needs n >= 1")
    half = mpmath.mpf(1) / 2
    return em.constant * mpmath.power(em.base, -n) * mpmath.power(n, half - em.exponent)


def seed_conditions(seed):
    """Names of the violated convergence conditions of the seed's theorem."""
    if seed.straight:
        return seed.cone().failed()
    if not twisted_ok(seed.l1, seed.l2):
        return ["l1 <= l2 <= tau*l1 with tau = (1+sqrt3)/2"]
    return []


def error_model(model, precision_bits=256):
    """Leading error term of the model's approximants."""
    seed = model.seed
    k = seed.k
    failed = list(seed_conditions(seed))
    with mpmath.workprec(precision_bits + 20):
        if model.normalization == "specialized":
            am, an, b1, b2 = model.target
            s_val = to_mp(b1) + to_mp(b2) - to_mp(am) - to_mp(an) - k[model.lam]
        else:
            s_val = to_mp(model.s)
        if mpmath.re(s_val) <= 0:
            failed.append("Re s(a) > 0")
        if failed:
            raise ConditionsUnmet("convergence conditions fail: " + "; ".join(failed), failed)
        a = tuple(model.base_point)
        try:
            rho = to_mp(rho_eval(a, k))
        except (DegenerateCoefficient, ZeroDivisionError) as exc:
            raise ConditionsUnmet(f"rho(a; k) cannot be evaluated: {exc}", ["rho finite"]) from None
        if seed.straight:
            base = D(k)
            e = e_straight(a, k)
            kind = "straight"
        else:
            base = E(seed.l1, seed.l2)
            e = e_twisted(a, k)
            kind = "twisted"
        reliable = True
        if model.normalization == "specialized":
            const = rho * e * gamma_hat(model.target, k, model.lam)
        else:
            try:
                if model.normalization == "f":
                    fa = f32_direct(a, precision_bits).value
                    g = gamma_factor(a, k)
                else:
                    fa = F32_direct(a, precision_bits).value
                    g = gamma_star(a, k)
            except PoleParameter as exc:
                raise ConditionsUnmet(str(exc), ["Gamma factors finite"]) from None
            margin = mpmath.mpf(2) ** (-precision_bits // 4)
            if abs(fa) < margin:
                reliable = False
                fa = margin
            const = rho * e * g / fa ** 2
        return ErrorModel(to_mp(base), const, s_val, model.normalization, kind, reliable)
