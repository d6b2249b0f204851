"""Parameter vectors, seed vectors and the cone predicates built from them."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeShift, NotBalanced, ParseError
from .scalars import fmt_exact, is_nonpositive_integer, parse_list, unify

TWISTS = ("straight", "cycle201", "cycle120")
TWIST_ALIASES = {"straight": "straight", "201": "cycle201", "cycle201": "cycle201",
                 "120": "cycle120", "cycle120": "cycle120"}
# sigma(x) = (x[lam], x[mu], x[nu]; x3, x4)
_TRIPLES = {"straight": (0, 1, 2), "cycle201": (2, 0, 1), "cycle120": (1, 2, 0)}


@dataclass(frozen=True)
class ParameterVector:
    """a = (a0, a1, a2; b1, b2) with exact rational or Gaussian-rational entries."""

    a0: object
    a1: object
    a2: object
    b1: object
    b2: object

    def __post_init__(self):
        vals = unify((self.a0, self.a1, self.a2, self.b1, self.b2))
        for name, v in zip(("a0", "a1", "a2", "b1", "b2"), vals):
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, values):
        values = list(values)
        if len(values) != 5:
            raise ValueError("a parameter vector has five entries")
        return cls(*values)

    @classmethod
    def parse(cls, text):
        return cls.of(parse_list(text, 5))

    def as_tuple(self):
        return (self.a0, self.a1, self.a2, self.b1, self.b2)

    def __iter__(self):
        return iter(self.as_tuple())

    def __getitem__(self, i):
        return self.as_tuple()[i]

    def __add__(self, other):
        return ParameterVector.of(x + y for x, y in zip(self, other))

    def shift(self, k, n=1):
        return ParameterVector.of(x + n * y for x, y in zip(self, k))

    @property
    def upper(self):
        return (self.a0, self.a1, self.a2)

    @property
    def lower(self):
        return (self.b1, self.b2)

    @property
    def is_complex(self):
        from .scalars import is_gaussian
        return is_gaussian(self.a0)

    @property
    def well_defined(self):
        return not any(is_nonpositive_integer(x) for x in self)

    def saalschutz_index(self):
        return saalschutz_index(self)

    def __str__(self):
        return "(" + ", ".join(fmt_exact(x) for x in self.upper) + "; " + \
            ", ".join(fmt_exact(x) for x in self.lower) + ")"


def saalschutz_index(a):
    """s(a) = b1 + b2 - a0 - a1 - a2 for any 5-sequence."""
    a0, a1, a2, b1, b2 = tuple(a)
    return b1 + b2 - a0 - a1 - a2


def sigma(x, twist):
    lam, mu, nu = _TRIPLES[twist]
    x = tuple(x)
    return (x[lam], x[mu], x[nu], x[3], x[4])


def _vadd(x, y):
    return tuple(p + q for p, q in zip(x, y))


@dataclass(frozen=True)
class SeedVector:
    """Integer seed k = (k0, k1, k2; l1, l2) with its twist."""

    k0: int
    k1: int
    k2: int
    l1: int
    l2: int
    twist: str = "straight"

    def __post_init__(self):
        twist = TWIST_ALIASES.get(self.twist)
        if twist is None:
            raise ValueError(f"unknown twist {self.twist!r}")
        object.__setattr__(self, "twist", twist)
        k = self.k
        for v in k:
            if isinstance(v, bool) or int(v) != v:
                raise ValueError("seed components must be integers")
        object.__setattr__(self, "k0", int(self.k0))
        object.__setattr__(self, "k1", int(self.k1))
        object.__setattr__(self, "k2", int(self.k2))
        object.__setattr__(self, "l1", int(self.l1))
        object.__setattr__(self, "l2", int(self.l2))
        if any(v < 0 for v in self.k):
            raise NegativeShift(f"seed {self.k} has a negative component")
        if not any(self.k):
            raise NegativeShift("seed must be nonzero")
        if saalschutz_index(self.k) != 0:
            raise NotBalanced(f"seed {self.k} is not balanced: s(k) = {saalschutz_index(self.k)}")

    @classmethod
    def of(cls, k, twist="straight"):
        return cls(*tuple(k), twist=twist)

    @classmethod
    def parse(cls, text, twist="straight"):
        try:
            vals = [int(p) for p in str(text).split(",")]
        except ValueError:
            raise ParseError(f"seed must be five integers: {text!r}") from None
        if len(vals) != 5:
            raise ParseError(f"seed must be five integers: {text!r}")
        return cls(*vals, twist=twist)

    @property
    def k(self):
        return (self.k0, self.k1, self.k2, self.l1, self.l2)

    @property
    def straight(self):
        return self.twist == "straight"

    def sigma(self, x):
        return sigma(x, self.twist)

    @property
    def l(self):
        return _vadd(self.k, self.sigma(self.k))

    @property
    def p(self):
        return _vadd(self.k, self.sigma(self.l))

    def cone(self):
        """Cone predicates relevant for this seed's error theorem."""
        if self.straight:
            return cone_check(self.k)
        return cone_check(self.p, twisted_l=(self.l1, self.l2))

    def __str__(self):
        k = self.k
        return f"({k[0]}, {k[1]}, {k[2]}; {k[3]}, {k[4]}) [{self.twist}]"


def s2(p):
    """p0p1 + p1p2 + p2p0 - q1q2."""
    p0, p1, p2, q1, q2 = tuple(p)
    return p0 * p1 + p1 * p2 + p2 * p0 - q1 * q2


def discriminant_Delta(p):
    """Delta(p) = e1^2 e2^2 + 18 e1 e2 e3 - 2 e2^3 - 8 e1^3 e3 - 27 e3^2."""
    p0, p1, p2, q1, q2 = (Fraction(x) for x in p)
    e1 = p0 + p1 + p2
    e2 = p0 * p1 + p1 * p2 + p2 * p0 + q1 * q2
    e3 = p0 * p1 * p2
    return e1 ** 2 * e2 ** 2 + 18 * e1 * e2 * e3 - 2 * e2 ** 3 - 8 * e1 ** 3 * e3 - 27 * e3 ** 2


def chi_cubic(p, x):
    """chi(x; p) = (x+q1-p0)(x+q1-p1)(x+q1-p2) + x(x+q1)(x+q1-q2)."""
    p0, p1, p2, q1, q2 = (Fraction(v) for v in p)
    x = Fraction(x)
    return (x + q1 - p0) * (x + q1 - p1) * (x + q1 - p2) + x * (x + q1) * (x + q1 - q2)


def in_SZ(p):
    p0, p1, p2, q1, q2 = tuple(p)
    return saalschutz_index(p) == 0 and p1 <= p0 and p2 <= p0 and p0 < q1 <= q2 < p1 + p2


def cond_b_value(p):
    p0, p1, p2, q1, q2 = tuple(p)
    return 2 * q1 * q1 - 2 * (p1 + p2) * q1 + p1 * p2


def twisted_ok(l1, l2):
    """l1 <= l2 <= tau*l1 with tau = (1+sqrt3)/2, decided exactly."""
    return 0 < l1 <= l2 and (2 * l2 - l1) ** 2 <= 3 * l1 * l1


@dataclass(frozen=True)
class ConeMembership:
    in_SZ: bool
    cond_a: bool
    cond_b: bool
    discriminant: Fraction
    twisted: bool = None

    @property
    def straight_ok(self):
        return self.in_SZ and (self.cond_a or self.cond_b)

    def failed(self):
        out = []
        if self.twisted is not None:
            if not self.twisted:
                out.append("l1 <= l2 <= tau*l1")
            return out
        if not self.in_SZ:
            out.append("k in S(Z): p1,p2 <= p0 < q1 <= q2 < p1+p2")
        if not (self.cond_a or self.cond_b):
            out.append("Delta(k) <= 0 or 2l1^2 - 2(k1+k2)l1 + k1k2 >= 0")
        return out


def cone_check(p, twisted_l=None):
    """Report S(Z) membership and the two cone conditions for an integer vector.

    When ``twisted_l = (l1, l2)`` is given, also record the exact twisted test.
    """
    p = tuple(p)
    disc = discriminant_Delta(p)
    tw = None if twisted_l is None else twisted_ok(*twisted_l)
    return ConeMembership(in_SZ=in_SZ(p), cond_a=disc <= 0, cond_b=cond_b_value(p) >= 0,
                          discriminant=disc, twisted=tw)
