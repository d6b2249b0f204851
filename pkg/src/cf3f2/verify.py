"""Identity and golden-value checks behind ``cf3f2 verify``.

Every check draws its random points from ``random.Random(rng_seed)`` so a
run is reproducible.  Numerical checks pass when the worst residual is
below 2^{-P/4} (relative where the identity has a natural scale).
"""

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .asymptotics import casoratian_check, t_vanishes
from .constants import D, E
from .contiguous import connection_matrix, decompose_seed, det_closed_form, uv_coefficients
from .errors import DegenerateRelation, HypCFError
from .params import SeedVector, saalschutz_index, s2
from .scalars import is_nonpositive_integer, to_mp
from .series import f32_direct, g32_direct, thomae_check

CHECKS = ("decomposition", "determinant", "contiguous", "thomae", "casoratian", "examples")

EX1 = SeedVector(1, 1, 0, 1, 1, twist="201")
EX2 = SeedVector(2, 0, 0, 1, 1, twist="201")
EX3 = SeedVector(2, 2, 2, 3, 3)

# seeds used for random residual checks: both types, small components
RESIDUAL_SEEDS = (
    EX1, EX2, EX3,
    SeedVector(0, 1, 1, 1, 1, twist="120"),
    SeedVector(1, 1, 1, 1, 2, twist="201"),
    SeedVector(1, 1, 1, 2, 1),
    SeedVector(2, 1, 1, 2, 2),
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    worst: object = None


def balanced_seeds(bound):
    """All nonzero balanced nonnegative shifts with components <= bound."""
    for k0, k1, k2 in itertools.product(range(bound + 1), repeat=3):
        total = k0 + k1 + k2
        for l1 in range(max(0, total - bound), min(bound, total) + 1):
            if total:
                yield (k0, k1, k2, l1, total - l1)


def random_rational(rng, lo, hi, den=12):
    d = rng.randint(1, den)
    return Fraction(rng.randint(math.ceil(lo * d), math.floor(hi * d)), d)


def random_point(rng):
    """Generic exact point with no vanishing denominators in practice."""
    return tuple(Fraction(rng.randint(-60, 60), rng.randint(1, 17)) + Fraction(1, 997) * i for i in range(5))


def random_admissible(rng, s_range=(Fraction(1, 2), Fraction(3)), need_t=False):
    """Point with positive parameters, Re s in s_range and no integer coincidences."""
    while True:
        a = [random_rational(rng, Fraction(1, 10), 3) for _ in range(3)]
        s = random_rational(rng, *s_range)
        b1 = random_rational(rng, Fraction(1, 2), 4)
        b2 = sum(a) + s - b1
        pt = (a[0], a[1], a[2], b1, b2)
        if any(x <= 0 for x in pt):
            continue
        diffs = [pt[j] - pt[i] for i in range(3) for j in (3, 4)]
        if any(d.denominator == 1 for d in diffs) or any(x.denominator == 1 for x in pt[:3]):
            continue
        if need_t and t_vanishes(pt):
            continue
        return pt


def _threshold(precision_bits):
    return mpmath.mpf(2) ** (-(precision_bits // 4))


def check_decomposition(precision_bits=256, rng_seed=0, bound=4):
    rng = random.Random(rng_seed)
    tested = 0
    for k in balanced_seeds(bound):
        a = random_point(rng)
        m1 = connection_matrix(a, k).entries
        m2 = connection_matrix(a, k, decompose_seed(k, alternate=True)).entries
        if m1 != m2:
            return CheckResult("decomposition", False, f"A(a;k) depends on the decomposition for k={k}")
        tested += 1
    return CheckResult("decomposition", True, f"{tested} shifts, exact agreement")


def check_determinant(precision_bits=256, rng_seed=0, bound=4):
    rng = random.Random(rng_seed + 1)
    tested = 0
    for k in balanced_seeds(bound):
        a = random_point(rng)
        if connection_matrix(a, k).det() != det_closed_form(a, k):
            return CheckResult("determinant", False, f"det A(a;k) differs from the closed form for k={k}")
        tested += 1
    bad = []
    for k in balanced_seeds(bound):
        for twist in ("201", "120"):
            sv = SeedVector.of(k, twist)
            l1, l2 = sv.k[3], sv.k[4]
            if D(sv.p) != E(l1, l2) ** 3:
                bad.append((k, twist))
    if bad:
        return CheckResult("determinant", False, f"D(p) != E(l1,l2)^3 for {bad[:3]}")
    return CheckResult("determinant", True, f"{tested} shifts exact; D(p) = E^3 for all twisted p")


def _residual(fn, a, u, v, k, l, P):
    fa = fn(a, P).value
    fk = fn(tuple(x + y for x, y in zip(a, k)), P).value
    fl = fn(tuple(x + y for x, y in zip(a, l)), P).value
    uk, vl = to_mp(u) * fk, to_mp(v) * fl
    scale = max(abs(fa), abs(uk), abs(vl))
    return abs(fa - uk - vl) / scale


def contiguous_residuals(pairs, precision_bits=256):
    """Worst relative residual of f(a) = u f(a+k) + v f(a+l) over (a, seed) pairs, for f and g."""
    worst_f = worst_g = mpmath.mpf(0)
    with mpmath.workprec(precision_bits):
        for a, seed in pairs:
            uv = uv_coefficients(a, seed)
            worst_f = max(worst_f, _residual(f32_direct, a, uv.u, uv.v, seed.k, seed.l, precision_bits))
            worst_g = max(worst_g, _residual(g32_direct, a, uv.u, uv.v, seed.k, seed.l, precision_bits))
    return worst_f, worst_g


def random_pairs(rng, count, need_t=False):
    out = []
    while len(out) < count:
        seed = rng.choice(RESIDUAL_SEEDS)
        a = random_admissible(rng, need_t=need_t)
        try:
            uv_coefficients(a, seed)
        except (DegenerateRelation, HypCFError):
            continue
        gp = (a[0] - a[3] + 1, a[0] - a[4] + 1)
        if any(is_nonpositive_integer(x) for x in gp):
            continue
        out.append((a, seed))
    return out


def check_contiguous(precision_bits=256, rng_seed=0, count=25):
    rng = random.Random(rng_seed + 2)
    pairs = random_pairs(rng, count)
    wf, wg = contiguous_residuals(pairs, precision_bits)
    thr = _threshold(precision_bits)
    ok = wf < thr and wg < thr
    return CheckResult("contiguous", ok,
                       f"{count} pairs, worst residual f {mpmath.nstr(wf, 3)}, g {mpmath.nstr(wg, 3)}",
                       max(wf, wg))


def thomae_residuals(points, precision_bits=256):
    worst = mpmath.mpf(0)
    with mpmath.workprec(precision_bits):
        for a in points:
            scale = abs(f32_direct(a, precision_bits).value)
            worst = max(worst, thomae_check(a, precision_bits) / scale)
    return worst


def check_thomae(precision_bits=256, rng_seed=0, count=25):
    rng = random.Random(rng_seed + 3)
    points = [random_admissible(rng) for _ in range(count)]
    worst = thomae_residuals(points, precision_bits)
    return CheckResult("thomae", worst < _threshold(precision_bits),
                       f"{count} points, worst relative residual {mpmath.nstr(worst, 3)}", worst)


def casoratian_gaps(pairs, precision_bits=256):
    worst = mpmath.mpf(0)
    for a, seed in pairs:
        rec = casoratian_check(a, seed, precision_bits)
        worst = max(worst, rec.relative_gap)
    return worst


def check_casoratian(precision_bits=256, rng_seed=0, count=25):
    rng = random.Random(rng_seed + 4)
    pairs = random_pairs(rng, count, need_t=True)
    kinds = {"straight" if s.straight else "twisted" for _, s in pairs}
    worst = casoratian_gaps(pairs, precision_bits)
    return CheckResult("casoratian", worst < _threshold(precision_bits),
                       f"{count} pairs ({'+'.join(sorted(kinds))}), worst relative gap {mpmath.nstr(worst, 3)}",
                       worst)


# printed formulas of the three worked examples -----------------------------


def ex1_uv(a):
    a0, a1, a2, b1, b2 = a
    return (b1 * b2 - a0 * a2) / (a0 * a1), -(b1 - a0) * (b2 - a0) / (a0 * a1)


def ex2_uv(a):
    a0, a1, a2, b1, b2 = a
    rho_l = b1 * b2 + a0 * a1 - (a2 - 1) * (a0 + a1 + 1)
    rho_k = b1 * b2 - a1 * a2 - (a0 + 1) * (b1 + b2 - a1 - a2)
    rho_sk = (b1 + 1) * (b2 + 1) - (a0 + 2) * a2 - (a1 + 1) * (b1 + b2 - a0 - a2)
    den = a0 * (a0 + 1) * rho_sk
    return (b1 - a1) * (b2 - a1) * rho_l / den, -(b1 - a2 + 1) * (b2 - a2 + 1) * rho_k / den


def ex3_rho_k(a):
    a0, a1, a2, b1, b2 = a
    return a0 * a1 * a2 * (b1 + b2 + 1) + b1 * b2 * (saalschutz_index(a) - s2(a))


def ex3_v(a):
    """v of Example 3; u needs rho(a; 2k), whose printed form is omitted."""
    a0, a1, a2, b1, b2 = a
    ak = tuple(x + y for x, y in zip(a, EX3.k))
    num = ex3_rho_k(a)
    for i in range(3):
        for j in (3, 4):
            num *= a[j] - a[i] + 1
    den = ex3_rho_k(ak)
    for i in range(3):
        den *= a[i] * (a[i] + 1)
    return -num / den


def example_mismatches(count=20, rng_seed=0):
    """Compare engine u, v with the printed example formulas at random exact points."""
    from .contiguous import rho_eval

    rng = random.Random(rng_seed + 5)
    report = {}
    for name, seed in (("example1", EX1), ("example2", EX2), ("example3", EX3)):
        done = bad = 0
        while done < count:
            a = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 13)) for _ in range(5))
            try:
                uv = uv_coefficients(a, seed)
                if name == "example1":
                    want = ex1_uv(a)
                elif name == "example2":
                    want = ex2_uv(a)
                else:
                    ak = tuple(x + y for x, y in zip(a, seed.k))
                    den = ex3_rho_k(ak) * a[0] * (a[0] + 1) * a[1] * (a[1] + 1) * a[2] * (a[2] + 1)
                    want = (rho_eval(a, seed.l) / den, ex3_v(a))
            except (ZeroDivisionError, HypCFError):
                continue
            done += 1
            if (uv.u, uv.v) != tuple(want):
                bad += 1
        report[name] = bad
    return report


def check_examples(precision_bits=256, rng_seed=0, count=20):
    report = example_mismatches(count, rng_seed)
    ok = not any(report.values())
    detail = ", ".join(f"{k}: {count - v}/{count} exact" for k, v in report.items())
    return CheckResult("examples", ok, detail)


RUNNERS = {
    "decomposition": check_decomposition,
    "determinant": check_determinant,
    "contiguous": check_contiguous,
    "thomae": check_thomae,
    "casoratian": check_casoratian,
    "examples": check_examples,
}


def run(only=None, precision_bits=256, rng_seed=20240101):
    names = only or list(CHECKS)
    out = []
    for name in names:
        try:
            out.append(RUNNERS[name](precision_bits, rng_seed))
        except HypCFError as exc:
            out.append(CheckResult(name, False, f"error: {exc}"))
    return out
