from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from cf3f2.constants import D, E
from cf3f2.errors import NegativeShift, NotBalanced, ParseError
from cf3f2.params import (ParameterVector, SeedVector, chi_cubic, cone_check, discriminant_Delta, in_SZ,
                          s2, saalschutz_index, twisted_ok)
from cf3f2.scalars import gaussian, is_gaussian, is_nonpositive_integer, parse_list, parse_literal


# literals -------------------------------------------------------------------

@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-3/4", Fraction(-3, 4)), ("0.25", Fraction(1, 4)), ("1e-2", Fraction(1, 100)),
])
def test_real_literals(text, value):
    assert parse_literal(text) == value


def test_complex_literals():
    z = parse_literal("1/2+3i")
    assert is_gaussian(z) and z == gaussian(Fraction(1, 2), 3)
    assert parse_literal("-2i") == gaussian(0, -2)
    assert parse_literal("0.5-0.25i") == gaussian(Fraction(1, 2), Fraction(-1, 4))


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1..2", "3/"])
def test_bad_literals(bad):
    with pytest.raises(ParseError):
        parse_literal(bad)


def test_parse_list_counts():
    assert parse_list("1,2/3,0.5") == [1, Fraction(2, 3), Fraction(1, 2)]
    with pytest.raises(ParseError):
        parse_list("1,2", 5)
    with pytest.raises(ParseError):
        parse_list("1,,2")


# parameter vectors ----------------------------------------------------------

def test_saalschutz_index():
    assert ParameterVector.of([1, 1, 1, 2, 2]).saalschutz_index() == 1
    a, b, c = sp.symbols("a b c")
    assert sp.simplify(saalschutz_index((1, a, b, 1, c)) - (c - a - b)) == 0


def test_parameter_vector_unifies_complex_entries():
    v = ParameterVector.parse("1,1/2+1i,3,4,5")
    assert v.is_complex and all(is_gaussian(x) for x in v)
    assert v.saalschutz_index() == gaussian(Fraction(9, 2), -1)


def test_well_defined():
    assert ParameterVector.of([1, 2, 3, 4, 5]).well_defined
    assert not ParameterVector.of([0, 2, 3, 4, 5]).well_defined
    assert not ParameterVector.of([1, 2, 3, -4, 5]).well_defined
    assert ParameterVector.parse("-1+1i,2,3,4,5").well_defined
    assert is_nonpositive_integer(gaussian(-3, 0))


@given(st.lists(st.fractions(max_denominator=20), min_size=5, max_size=5), st.integers(-20, 20))
def test_index_invariant_along_balanced_shift(a, n):
    p = (2, 2, 2, 3, 3)
    shifted = tuple(x + n * y for x, y in zip(a, p))
    assert saalschutz_index(shifted) == saalschutz_index(a)


# seed vectors ---------------------------------------------------------------

def test_seed_validation():
    with pytest.raises(NotBalanced):
        SeedVector(1, 1, 1, 1, 1)
    with pytest.raises(NegativeShift):
        SeedVector(-1, 1, 1, 0, 1)
    with pytest.raises(NegativeShift):
        SeedVector(0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        SeedVector(1, 1, 0, 1, 1, twist="spiral")
    with pytest.raises(ParseError):
        SeedVector.parse("1,1,0,1")


def test_example_seeds_derive_l_and_p():
    ex1 = SeedVector(1, 1, 0, 1, 1, twist="201")
    assert ex1.l == (1, 2, 1, 2, 2) and ex1.p == (2, 2, 2, 3, 3)
    assert ex1.sigma((10, 11, 12, 13, 14)) == (12, 10, 11, 13, 14)
    ex2 = SeedVector(2, 0, 0, 1, 1, twist="cycle201")
    assert ex2.l == (2, 2, 0, 2, 2) and ex2.p == (2, 2, 2, 3, 3)
    ex3 = SeedVector(2, 2, 2, 3, 3)
    assert ex3.l == (4, 4, 4, 6, 6) and ex3.p == (6, 6, 6, 9, 9)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 18), st.sampled_from(["201", "120"]))
def test_twisted_p_shape(k0, k1, k2, l1, twist):
    total = k0 + k1 + k2
    if total == 0 or l1 > total:
        return
    sv = SeedVector(k0, k1, k2, l1, total - l1, twist=twist)
    assert sv.p == (total, total, total, 3 * l1, 3 * (total - l1))


# scalar predicates ----------------------------------------------------------

def test_s2_values():
    assert s2((2, 2, 2, 3, 3)) == 3
    assert s2((1, 1, 1, 1, 2)) == 1


@given(st.integers(1, 30), st.integers(1, 30))
def test_s2_twisted_identity(l1, l2):
    m = l1 + l2
    assert s2((m, m, m, 3 * l1, 3 * l2)) == 3 * (l1 * l1 - l1 * l2 + l2 * l2)


def _factored_delta(l1, l2):
    return -27 * (l2 ** 2 - 4 * l1 * l2 + l1 ** 2) * (l2 ** 2 + 2 * l1 * l2 - 2 * l1 ** 2) \
        * (2 * l2 ** 2 - 2 * l1 * l2 - l1 ** 2)


def test_delta_examples():
    assert discriminant_Delta((2, 2, 2, 3, 3)) == -54 == _factored_delta(1, 1)
    assert discriminant_Delta((0, 0, 0, 0, 0)) == 0


@given(st.integers(1, 25), st.integers(1, 25))
def test_delta_twisted_factored(l1, l2):
    m = l1 + l2
    assert discriminant_Delta((m, m, m, 3 * l1, 3 * l2)) == _factored_delta(l1, l2)


def test_delta_is_quarter_discriminant_of_chi():
    x = sp.symbols("x")
    for p in [(2, 2, 2, 3, 3), (5, 4, 3, 6, 6), (7, 5, 6, 8, 10), (4, 4, 3, 5, 6), (9, 8, 2, 10, 9)]:
        p0, p1, p2, q1, q2 = p
        chi = (x + q1 - p0) * (x + q1 - p1) * (x + q1 - p2) + x * (x + q1) * (x + q1 - q2)
        assert 4 * discriminant_Delta(p) == sp.discriminant(sp.expand(chi), x)


def test_chi_cubic_values():
    assert chi_cubic((2, 2, 2, 3, 3), 1) == 12
    p = (5, 4, 3, 6, 6)
    assert chi_cubic(p, 0) == (6 - 5) * (6 - 4) * (6 - 3)


def test_cone_check_examples():
    c = cone_check((2, 2, 2, 3, 3))
    assert c.in_SZ and c.cond_a and c.straight_ok
    assert not in_SZ((2, 2, 2, 2, 4))
    assert SeedVector(1, 1, 0, 1, 1, twist="201").cone().twisted


def test_twisted_tau_boundary_exact():
    # tau = 1.3660254..., so 11/8 is outside and 15/11 inside
    assert twisted_ok(8, 10) and not twisted_ok(8, 11)
    assert twisted_ok(11, 15)
    assert not twisted_ok(2, 1)


def test_twisted_characterizations_agree():
    """Derived p in S(Z) with cond_a <=> l1 <= l2 <= tau l1 (for l1 <= l2)."""
    for l1 in range(1, 51):
        for l2 in range(l1, 51):
            m = l1 + l2
            c = cone_check((m, m, m, 3 * l1, 3 * l2))
            assert (c.in_SZ and c.cond_a) == twisted_ok(l1, l2), (l1, l2)


def test_chi_nonnegative_on_cone():
    for p0 in range(1, 12):
        for p1 in range(1, p0 + 1):
            for p2 in range(1, p0 + 1):
                for q1 in range(p0 + 1, p1 + p2):
                    q2 = p0 + p1 + p2 - q1
                    p = (p0, p1, p2, q1, q2)
                    c = cone_check(p)
                    if not (c.in_SZ and (c.cond_a or c.cond_b)):
                        continue
                    steps = int((q2 - q1) * 16)
                    assert all(chi_cubic(p, Fraction(i, 16)) >= 0 for i in range(steps + 1)), p


def test_growth_bases():
    assert D((2, 2, 2, 3, 3)) == 64 == E(1, 1) ** 3
    assert E(1, 1) == 4


def test_D_equals_E_cubed_exhaustive():
    for l1 in range(0, 31):
        for l2 in range(0, 31):
            if l1 + l2 == 0:
                continue
            m = l1 + l2
            assert D((m, m, m, 3 * l1, 3 * l2)) == E(l1, l2) ** 3


def test_E_exceeds_one_in_twisted_range():
    for l1 in range(1, 31):
        for l2 in range(l1, 2 * l1):
            if twisted_ok(l1, l2):
                assert abs(E(l1, l2)) > 1


def test_D_exceeds_one_on_cone():
    for p0 in range(1, 13):
        for p1 in range(1, p0 + 1):
            for p2 in range(1, p0 + 1):
                for q1 in range(p0 + 1, min(p1 + p2, 13)):
                    q2 = p0 + p1 + p2 - q1
                    if q2 <= 12 and in_SZ((p0, p1, p2, q1, q2)):
                        assert abs(D((p0, p1, p2, q1, q2))) > 1


def test_D_sign_on_cone():
    assert D((3, 3, 3, 4, 5)) < 0
    for p0 in range(1, 10):
        for p1 in range(1, p0 + 1):
            for p2 in range(1, p0 + 1):
                for q1 in range(p0 + 1, p1 + p2):
                    p = (p0, p1, p2, q1, p0 + p1 + p2 - q1)
                    if in_SZ(p):
                        assert (D(p) < 0) == ((p[3] + p[4]) % 2 == 1)
