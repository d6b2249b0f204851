"""Removable singularities of rational coefficient formulas.

Many coefficient formulas are ratios of polynomials that vanish together
at special parameter points (for instance at ``s(a) = 1``, at the Gauss
point ``b1 = 1`` or when a pivot b_mu - a_j of an intermediate basic matrix
vanishes).  The value there is the limit of the rational function.

We compute it exactly by re-running the same formula at ``point + t*d``
with every scalar replaced by a truncated Laurent series in t with exact
rational coefficients.  Precision loss is tracked; when it runs out the
truncation order is raised, and sympy's exact field Q(t) is the last
resort.  A negative t-valuation of the result is a genuine pole.  Two
independent directions must give the same value, otherwise the limit is
path dependent.
"""

from fractions import Fraction

from gmpy2 import mpq
from sympy import QQ
from sympy.polys.domains import QQ_I

from .errors import BalancedIndexOne, DegenerateCoefficient, DegenerateRelation, SingularShift
from .scalars import gaussian, is_gaussian, lift, lower, unify


class PrecisionLoss(ArithmeticError):
    """A truncated series lost all its significant coefficients."""


SINGULAR = (ZeroDivisionError, SingularShift, DegenerateRelation, BalancedIndexOne)

DIRECTIONS = (
    (3, 5, 7, 11, 13),
    (-2, 9, 4, 17, -5),
)

ORDERS = (6, 16, 40)


def _recip(x):
    return mpq(1, x) if isinstance(x, int) else 1 / x


def _q(x):
    # coefficients are kept as gmpy2 rationals, which are much faster than Fractions
    return mpq(x.numerator, x.denominator) if isinstance(x, Fraction) else x


class TSeries:
    """t^v (c_0 + c_1 t + ... + c_{m-1} t^{m-1} + O(t^{v+m})) with c_0 != 0.

    An empty coefficient list denotes a value known only to be O(t^v).
    """

    __slots__ = ("v", "c")

    def __init__(self, v, coeffs):
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        self.v = v + i
        self.c = coeffs[i:]

    @property
    def precision(self):
        return self.v + len(self.c)

    def __neg__(self):
        return TSeries(self.v, [-x for x in self.c])

    def __add__(self, other):
        top = self.precision
        if isinstance(other, TSeries):
            top = min(top, other.precision)
            parts = [(self.v, self.c), (other.v, other.c)]
        else:
            if other == 0 or top <= 0:
                # an exact constant beyond the known precision changes nothing
                return self
            parts = [(self.v, self.c), (0, [_q(other)])]
        v = min(p[0] for p in parts)
        if top <= v:
            return TSeries(top, [])
        out = [0] * (top - v)
        for start, coeffs in parts:
            for i, x in enumerate(coeffs):
                j = start + i - v
                if j < len(out):
                    out[j] = out[j] + x
        return TSeries(v, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            if other == 0:
                return 0
            other = _q(other)
            return TSeries(self.v, [x * other for x in self.c])
        m = min(len(self.c), len(other.c))
        x, y = self.c, other.c
        out = [0] * m
        for i in range(m):
            xi = x[i]
            if xi == 0:
                continue
            for j in range(m - i):
                out[i + j] = out[i + j] + xi * y[j]
        return TSeries(self.v + other.v, out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.c:
            raise PrecisionLoss("division by an undetermined series")
        c = self.c
        m = len(c)
        inv = [0] * m
        inv[0] = _recip(c[0])
        for n in range(1, m):
            acc = 0
            for k in range(1, n + 1):
                acc = acc + c[k] * inv[n - k]
            inv[n] = -acc * inv[0]
        return TSeries(-self.v, inv)

    def __truediv__(self, other):
        if not isinstance(other, TSeries):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = _recip(_q(other))
            return TSeries(self.v, [x * inv for x in self.c])
        return self * other.inverse()

    def __rtruediv__(self, other):
        if other == 0:
            return 0
        return self.inverse() * _q(other)

    def __eq__(self, other):
        if not isinstance(other, TSeries) and other == 0:
            if not self.c:
                raise PrecisionLoss("zero test on an undetermined series")
            return False
        return NotImplemented

    __hash__ = object.__hash__

    def at_zero(self):
        if not self.c:
            raise PrecisionLoss("value at t=0 undetermined")
        if self.v < 0:
            raise ZeroDivisionError("genuine pole")
        return self.c[0] if self.v == 0 else 0


def _finish(value, complex_result):
    if isinstance(value, TSeries):
        value = value.at_zero()
    if complex_result:
        return value if is_gaussian(value) else gaussian(value)
    return Fraction(int(value.numerator), int(value.denominator))


def _along_series(fn, point, direction, m):
    pt = [TSeries(0, [_q(x), mpq(d)] + [0] * (m - 2)) for x, d in zip(point, direction)]
    out = fn(pt)
    complex_result = any(is_gaussian(x) for x in point)
    if isinstance(out, tuple):
        return tuple(_finish(v, complex_result) for v in out)
    return _finish(out, complex_result)


def _reduce_at_zero(value, complex_result):
    if not hasattr(value, "numer"):
        return lower(value, complex_result) if hasattr(value, "numerator") or is_gaussian(value) else value
    num = value.numer(0)
    den = value.denom(0)
    if den == 0:
        raise ZeroDivisionError("genuine pole")
    return lower(num / den, complex_result)


def along_exact(fn, point, direction):
    """Evaluate ``fn`` at point + t*direction over the field Q(t) and return the value at t=0."""
    complex_result = any(is_gaussian(x) for x in point)
    ground = QQ_I if complex_result else QQ
    fld = ground.frac_field("t")
    t = fld.gens[0]
    lifted = [lift(x, fld) + d * t for x, d in zip(point, direction)]
    out = fn(lifted)
    if isinstance(out, tuple):
        return tuple(_reduce_at_zero(v, complex_result) for v in out)
    return _reduce_at_zero(out, complex_result)


def along(fn, point, direction):
    """Limit of ``fn`` at ``point`` along the line point + t*direction."""
    point = unify(point)
    for m in ORDERS:
        try:
            return _along_series(fn, point, direction, m)
        except PrecisionLoss:
            continue
    return along_exact(fn, point, direction)


def limit_value(fn, point, mask=None, what="coefficient", n=None):
    """Value of ``fn`` at ``point``, taking a limit when the direct evaluation is 0/0.

    ``mask`` zeroes direction components that must stay fixed (used by the
    specialization, which keeps a_lambda = 0 exactly).
    """
    try:
        return fn(list(point))
    except SINGULAR:
        pass
    results = []
    for d in DIRECTIONS:
        if mask is not None:
            d = tuple(x if keep else 0 for x, keep in zip(d, mask))
        try:
            results.append(along(fn, point, d))
        except SINGULAR as exc:
            raise DegenerateCoefficient(f"{what} has a pole at the parameter point ({exc})", n=n) from None
    if results[0] != results[1]:
        raise DegenerateCoefficient(f"{what} has a direction-dependent limit at the parameter point", n=n)
    return results[0]
