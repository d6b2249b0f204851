"""Exact connection matrices A(a; k) and the coefficients derived from them.

Convention: for the shift 1 = (1,1,1;1,1),

    (f(a+k), f(a+k+1))^T = A(a; k) (f(a), f(a+1))^T,

and A(a; k1+k2) = A(a+k1; k2) A(a; k1).  All routines work over any field
whose elements support + - * / and ``== 0``: Fractions, Gaussian rationals
or sympy rational-function fields (used for limits).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BalancedIndexOne, DegenerateCoefficient, DegenerateRelation, NegativeShift, NotBalanced, SingularShift
from .limits import limit_value
from .params import ParameterVector, SeedVector, saalschutz_index
from .scalars import fmt_exact, is_gaussian, pochhammer, unify

BASIC = tuple((i, mu) for i in range(3) for mu in (1, 2))


def _point(a):
    """Make plain numeric input exact; field elements pass through untouched."""
    a = tuple(a)
    if all(isinstance(x, (int, Fraction, str)) or is_gaussian(x) for x in a):
        return tuple(unify(a))
    return a


def basic_vector(i, mu):
    v = [0] * 5
    v[i] = 1
    v[2 + mu] = 1
    return tuple(v)


def _matmul(x, y):
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def _det(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def basic_entries(a, i, mu):
    """Entries of A(a; e^i_mu) as a nested tuple."""
    a = tuple(a)
    j, k = [x for x in (0, 1, 2) if x != i]
    b = a[2 + mu]
    d1, d2 = b - a[j], b - a[k]
    if d1 == 0 or d2 == 0:
        raise SingularShift(f"b{mu} - a{j if d1 == 0 else k} vanishes", point=a)
    d = d1 * d2
    s = saalschutz_index(a)
    return ((a[i] * (b - a[j] - a[k]) / d, (s - 1) / d),
            (a[i] * a[j] * a[k] / d, ((a[i] + 1) * b + a[j] * a[k] - a[3] * a[4]) / d))


def _validate_seed(k):
    k = tuple(int(x) for x in k)
    if len(k) != 5:
        raise ValueError("shift vectors have five components")
    if any(x < 0 for x in k):
        raise NegativeShift(f"shift {k} has a negative component")
    if saalschutz_index(k) != 0:
        raise NotBalanced(f"shift {k} is not balanced")
    return k


def decompose_seed(k, alternate=False):
    """Ordered list of basic vectors (i, mu) summing to k.

    Case k0 >= l1: l1 x e^0_1, (k0-l1) x e^0_2, k1 x e^1_2, k2 x e^2_2.
    Otherwise k12 e^1_2 + k22 e^2_2 + k0 e^0_1 + k11 e^1_1 + k21 e^2_1 with
    k12 then k22 maximal.  ``alternate`` picks k11 then k21 maximal instead
    and reverses the order, giving a second valid factorization.
    """
    k0, k1, k2, l1, l2 = _validate_seed(k)
    if k0 >= l1:
        parts = [((0, 1), l1), ((0, 2), k0 - l1), ((1, 2), k1), ((2, 2), k2)]
    else:
        if not alternate:
            k12 = min(k1, l2)
            k22 = l2 - k12
            k11, k21 = k1 - k12, k2 - k22
        else:
            k11 = min(k1, l1 - k0)
            k21 = l1 - k0 - k11
            k12, k22 = k1 - k11, k2 - k21
        parts = [((1, 2), k12), ((2, 2), k22), ((0, 1), k0), ((1, 1), k11), ((2, 1), k21)]
    out = [v for v, c in parts for _ in range(c)]
    return out[::-1] if alternate else out


def chain(a, decomposition):
    """Product A(a+v1+...+v_{m-1}; v_m) ... A(a; v1)."""
    point = list(a)
    m = ((1, 0), (0, 1))
    for i, mu in decomposition:
        try:
            m = _matmul(basic_entries(point, i, mu), m)
        except SingularShift as exc:
            raise SingularShift(str(exc), point=tuple(point)) from None
        point[i] += 1
        point[2 + mu] += 1
    return m


def connection_entries(a, k):
    """A(a; k) by the canonical decomposition, retrying the alternate one on a singular pivot."""
    try:
        return chain(a, decompose_seed(k))
    except SingularShift as first:
        try:
            return chain(a, decompose_seed(k, alternate=True))
        except SingularShift:
            raise first from None


@dataclass(frozen=True)
class ConnectionMatrix:
    entries: tuple
    at_point: tuple
    shift: tuple

    @property
    def r(self):
        return self.entries[0][1]

    @property
    def r1(self):
        return self.entries[0][0]

    def det(self):
        return _det(self.entries)

    def __matmul__(self, other):
        return ConnectionMatrix(_matmul(self.entries, other.entries), other.at_point,
                                tuple(x + y for x, y in zip(self.shift, other.shift)))

    def to_record(self):
        return {
            "at_point": [fmt_exact(x) for x in self.at_point],
            "shift": list(self.shift),
            "entries": [[fmt_exact(x) for x in row] for row in self.entries],
        }


def basic_matrix(a, i, mu):
    a = _point(a)
    return ConnectionMatrix(basic_entries(a, i, mu), a, basic_vector(i, mu))


def connection_matrix(a, k, decomposition=None):
    a = _point(a)
    k = _validate_seed(k)
    if decomposition is None:
        entries = connection_entries(a, k)
    else:
        total = tuple(sum(basic_vector(*v)[c] for v in decomposition) for c in range(5))
        if total != k:
            raise ValueError("decomposition does not sum to the shift")
        entries = chain(a, decomposition)
    return ConnectionMatrix(entries, a, k)


def r_entry(a, k):
    return connection_entries(_point(a), _validate_seed(k))[0][1]


def _pairs():
    return [(i, j) for i in range(3) for j in (1, 2)]


def bracket_product(a, k, part=None):
    """prod_{i,j} (b_j - a_i; l_j - k_i), optionally restricted to the positive or negative parts."""
    a = tuple(a)
    out = 1
    for i, j in _pairs():
        m = k[2 + j] - k[i]
        if part == "+":
            m = max(m, 0)
        elif part == "-":
            m = max(-m, 0)
        out = out * pochhammer(a[2 + j] - a[i], m)
    return out


def upper_product(a, k):
    out = 1
    for i in range(3):
        out = out * pochhammer(a[i], k[i])
    return out


def det_closed_form(a, k):
    """(-1)^{k0+k1+k2} (s(a)-1; s(k)) prod (a_i; k_i) / prod prod (b_j-a_i; l_j-k_i)."""
    a = _point(a)
    sign = -1 if (k[0] + k[1] + k[2]) % 2 else 1
    mid = pochhammer(saalschutz_index(a) - 1, saalschutz_index(k))
    den = bracket_product(a, k)
    if den == 0:
        raise SingularShift("factorial product in the determinant vanishes", point=a)
    return sign * mid * upper_product(a, k) / den


def _rho_raw(a, k):
    s = saalschutz_index(a)
    if s - 1 == 0:
        raise BalancedIndexOne("s(a) = 1")
    return -r_entry(a, k) * bracket_product(a, k, "+") / (s - 1)


def rho_eval(a, k, allow_limit=True):
    """Value of the polynomial rho(a; k) at the point a.

    At s(a) = 1 the defining quotient is 0/0; with ``allow_limit`` we take
    the exact limit, which is the polynomial's value there.
    """
    a = _point(a)
    k = _validate_seed(k)
    if not allow_limit:
        return _rho_raw(a, k)
    return limit_value(lambda x: _rho_raw(x, k), a, what="rho")


@dataclass(frozen=True)
class UVPair:
    u: object
    v: object
    at_point: tuple
    seed: SeedVector


def uv_raw(a, k, lk):
    """(u, v) at the point a for the relation f(a) = u f(a+k) + v f(a+l), with l = k + lk."""
    a = tuple(a)
    ak = connection_entries(a, k)
    a_plus = tuple(x + y for x, y in zip(a, k))
    alk = connection_entries(a_plus, lk)
    r_l = _matmul(alk, ak)[0][1]
    den = _det(ak) * alk[0][1]
    if den == 0:
        raise DegenerateRelation("r(a+k; l-k) or det A(a; k) vanishes at this point")
    return r_l / den, -ak[0][1] / den


def f_head_raw(a, k, lk):
    """F-normalized head (q*(0), r*(1)) = (u, v) * prod (a_i; k_i), free of 1/(a_i; k_i)."""
    a = tuple(a)
    ak = connection_entries(a, k)
    a_plus = tuple(x + y for x, y in zip(a, k))
    alk = connection_entries(a_plus, lk)
    r_l = _matmul(alk, ak)[0][1]
    r_lk = alk[0][1]
    if r_lk == 0:
        raise DegenerateRelation("r(a+k; l-k) vanishes at this point")
    pi = bracket_product(a, k)
    sign = -1 if (k[0] + k[1] + k[2]) % 2 else 1
    return sign * r_l * pi / r_lk, -sign * ak[0][1] * pi / r_lk


def uv_coefficients(a, seed):
    """u, v of the contiguous relation f(a) = u f(a+k) + v f(a+l) for the seed's l.

    Removable singularities (a vanishing pivot at an intermediate point of
    the chain, say) are resolved by an exact limit; a genuine zero of
    r(a+k; l-k) raises DegenerateRelation.
    """
    a = tuple(ParameterVector.of(a))
    k, lk = seed.k, seed.sigma(seed.k)
    try:
        u, v = uv_raw(a, k, lk)
    except (SingularShift, ZeroDivisionError, DegenerateRelation):
        try:
            u, v = limit_value(lambda x: uv_raw(x, k, lk), a, what="u, v")
        except DegenerateCoefficient as exc:
            raise DegenerateRelation(str(exc)) from None
    return UVPair(u, v, a, seed)
