"""Exact scalars, literal parsing and multiprecision conversion.

Real parameters are carried as :class:`fractions.Fraction`.  Complex
parameters are carried as Gaussian rationals from sympy's ``QQ_I`` domain,
which supports the same field operations.  A parameter vector is always
homogeneous: if any entry is complex, all entries are lifted to ``QQ_I``.
"""

import re
from fractions import Fraction

import mpmath
from sympy.polys.domains import QQ, QQ_I

from .errors import ParseError

_GAUSS_TYPE = type(QQ_I(0, 0))

_REAL = r"[+-]?(?:\d+/\d+|\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
_REAL_RE = re.compile(rf"^{_REAL}$")
_COMPLEX_RE = re.compile(rf"^(?P<re>{_REAL})?(?P<im>[+-](?:\d+/\d+|\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+)?)[ij]$")


def _parse_real(text):
    text = text.strip()
    if not _REAL_RE.match(text):
        raise ParseError(f"not a rational or decimal literal: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad literal {text!r}: {exc}") from None


def parse_literal(text):
    """Parse ``INT``, ``INT/INT``, ``DEC`` or a complex ``re±imi`` literal exactly.

    >>> parse_literal("3/4")
    Fraction(3, 4)
    >>> parse_literal("0.25")
    Fraction(1, 4)
    """
    text = str(text).strip().replace(" ", "")
    if not text:
        raise ParseError("empty literal")
    if text[-1] in "ij":
        m = _COMPLEX_RE.match(text)
        if m is None:
            # pure imaginary like "2i" or "1/2i"
            body = text[:-1]
            if body in ("", "+", "-"):
                body += "1"
            return gaussian(0, _parse_real(body))
        re_part = _parse_real(m.group("re")) if m.group("re") else Fraction(0)
        im_text = m.group("im")
        if im_text in ("+", "-"):
            im_text += "1"
        return gaussian(re_part, _parse_real(im_text))
    return _parse_real(text)


def parse_list(text, count=None):
    """Split a comma separated list of literals.

    Complex entries may be written as ``re±imi``.  The ``re,im`` pair form is
    not accepted inside a list, since commas already separate entries.
    """
    parts = [p for p in str(text).split(",")]
    if any(not p.strip() for p in parts):
        raise ParseError(f"empty entry in list {text!r}")
    values = [parse_literal(p) for p in parts]
    if count is not None and len(values) not in (count if isinstance(count, tuple) else (count,)):
        raise ParseError(f"expected {count} values, got {len(values)} in {text!r}")
    return values


def _qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def gaussian(re_part, im_part=0):
    return QQ_I(_qq(re_part), _qq(im_part))


def is_gaussian(x):
    return isinstance(x, _GAUSS_TYPE)


def _from_qq(q):
    return Fraction(int(q.numerator), int(q.denominator))


def real_imag(x):
    """Return the exact (re, im) pair of an exact scalar as Fractions."""
    if is_gaussian(x):
        return _from_qq(x.x), _from_qq(x.y)
    return Fraction(x), Fraction(0)


def to_exact(x):
    """Coerce ints, Fractions, literals and Gaussian rationals to an exact scalar."""
    if isinstance(x, bool):
        raise TypeError("booleans are not parameters")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if is_gaussian(x):
        return x
    if isinstance(x, str):
        return parse_literal(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, complex):
        return gaussian(Fraction(x.real), Fraction(x.imag))
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


def unify(values):
    """Make a list of exact scalars homogeneous (all Fraction or all Gaussian)."""
    values = [to_exact(v) for v in values]
    if any(is_gaussian(v) for v in values):
        return [v if is_gaussian(v) else gaussian(v) for v in values]
    return values


def simplify(x):
    """Drop a zero imaginary part."""
    if is_gaussian(x) and x.y == 0:
        return _from_qq(x.x)
    return x


def is_zero(x):
    return x == 0


def is_nonpositive_integer(x):
    """Exact test for membership in Z_{<=0}.  Complex values need a zero imaginary part."""
    if is_gaussian(x):
        if x.y != 0:
            return False
        x = _from_qq(x.x)
    if isinstance(x, Fraction):
        return x.denominator == 1 and x <= 0
    if isinstance(x, int):
        return x <= 0
    if isinstance(x, mpmath.mpc):
        if x.imag != 0:
            return False
        x = x.real
    x = mpmath.mpf(x)
    return x <= 0 and mpmath.isint(x)


def to_mp(x):
    """Convert an exact scalar (or an mpmath number) to mpf/mpc at the current precision."""
    if is_gaussian(x):
        re_part, im_part = real_imag(x)
        if im_part == 0:
            return mpmath.mpf(re_part.numerator) / re_part.denominator
        return mpmath.mpc(mpmath.mpf(re_part.numerator) / re_part.denominator,
                          mpmath.mpf(im_part.numerator) / im_part.denominator)
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpmath.mpf(x)
    return mpmath.mpmathify(x)


def fmt_exact(x):
    """Render an exact scalar as a short string (``p/q`` or ``p/q+r/si``)."""
    if is_gaussian(x):
        re_part, im_part = real_imag(x)
        if im_part == 0:
            return str(re_part)
        sign = "+" if im_part >= 0 else "-"
        return f"{re_part}{sign}{abs(im_part)}i"
    return str(Fraction(x))


def pochhammer(x, m):
    """Exact rising factorial (x; m) for integer m, with (x; -m) = 1/((x-1)...(x-m))."""
    result = 1
    if m >= 0:
        for i in range(m):
            result = result * (x + i)
        return result
    for i in range(1, -m + 1):
        result = result * (x - i)
    return 1 / result if not isinstance(result, int) else Fraction(1, result)


def field_of(values):
    """The sympy ground domain matching a homogeneous list of exact scalars."""
    return QQ_I if any(is_gaussian(v) for v in values) else QQ


def lift(x, field):
    """Embed an exact scalar into a sympy rational function field over QQ or QQ_I."""
    if is_gaussian(x):
        return field.convert(x)
    x = Fraction(x)
    if field.domain == QQ_I:
        return field.convert(gaussian(x))
    return field.convert(_qq(x))


def lower(q, complex_result):
    """Bring an element of QQ or QQ_I back to Fraction or Gaussian form."""
    if is_gaussian(q):
        return q if complex_result else simplify(q)
    v = _from_qq(q)
    return gaussian(v) if complex_result else v
