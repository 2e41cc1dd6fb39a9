"""Exact Gaussian rationals a + b*i with a, b in Q.

Components are ``gmpy2.mpq`` values, which are always kept in lowest terms
with a positive denominator, so structural equality is value equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import ScalarParseError

_MPQ = type(mpq(0))
_Q0 = mpq(0)
_Q1 = mpq(1)


def _to_mpq(x) -> mpq:
    if type(x) is _MPQ:
        return x
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, Rational):
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        try:
            return mpq(Fraction(x.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarParseError(f"bad rational {x!r}") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _to_mpq(re)
        self.im = _to_mpq(im)

    @classmethod
    def _raw(cls, re, im) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if type(x) is cls:
            return x
        if isinstance(x, GaussianRational):
            return cls._raw(x.re, x.im)
        if isinstance(x, complex):
            if x.real != int(x.real) or x.imag != int(x.imag):
                raise TypeError("only integral complex literals convert exactly")
            return cls(int(x.real), int(x.imag))
        if isinstance(x, str):
            return parse_scalar(x)
        return cls._raw(_to_mpq(x), _Q0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = other if type(other) is GaussianRational else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if type(other) is GaussianRational else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = other if type(other) is GaussianRational else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, _Q0)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "GaussianRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational._raw(1 / a, _Q0)
        n = a * a + b * b
        return GaussianRational._raw(a / n, -b / n)

    def __truediv__(self, other):
        o = other if type(other) is GaussianRational else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    # comparison / hashing -------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # text -----------------------------------------------------------------
    def __str__(self):
        re_txt = _fmt(self.re)
        if not self.im:
            return re_txt
        sign = "-" if self.im < 0 else "+"
        return f"{re_txt}{sign}{_fmt(abs(self.im))}*i"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    def to_sympy(self):
        import sympy

        re = sympy.Rational(int(self.re.numerator), int(self.re.denominator))
        im = sympy.Rational(int(self.im.numerator), int(self.im.denominator))
        return re + sympy.I * im


def _fmt(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coerce_or_none(x):
    if isinstance(x, GaussianRational):
        return GaussianRational._raw(x.re, x.im)
    if isinstance(x, (int, Fraction, Rational)) or type(x) is _MPQ:
        return GaussianRational._raw(_to_mpq(x), _Q0)
    if isinstance(x, complex):
        try:
            return GaussianRational.coerce(x)
        except TypeError:
            return None
    return None


ZERO = GaussianRational._raw(_Q0, _Q0)
ONE = GaussianRational._raw(_Q1, _Q0)
I = GaussianRational._raw(_Q0, _Q1)

_RAT = r"\d+(?:/\d+)?"
_IMAG = re.compile(rf"^(?P<sign>[+-]?)(?:(?P<mag>{_RAT})\*?)?i$")
_REAL = re.compile(rf"^[+-]?{_RAT}$")
_SPLIT = re.compile(rf"^(?P<re>[+-]?{_RAT})(?P<im>[+-](?:{_RAT}\*?)?i)$")


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"p/q"``, ``"p/q+r/s*i"``, ``"p/q-r/s*i"``, ``"i"``, ``"-2*i"``..."""
    if not isinstance(text, str):
        raise ScalarParseError(f"expected scalar text, got {type(text).__name__}")
    s = text.replace(" ", "")
    if not s:
        raise ScalarParseError("empty scalar")
    try:
        if _REAL.match(s):
            return GaussianRational(mpq(Fraction(s)))
        m = _IMAG.match(s)
        if m:
            return GaussianRational(0, _imag_part(m.group("sign"), m.group("mag")))
        m = _SPLIT.match(s)
        if m:
            im = _IMAG.match(m.group("im"))
            return GaussianRational(
                mpq(Fraction(m.group("re"))), _imag_part(im.group("sign"), im.group("mag"))
            )
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"zero denominator in {text!r}") from exc
    raise ScalarParseError(f"cannot parse scalar {text!r}")


def _imag_part(sign: str, mag: str | None) -> mpq:
    value = mpq(Fraction(mag)) if mag else _Q1
    return -value if sign == "-" else value


def gr(x) -> GaussianRational:
    """Shorthand coercion used throughout the package and tests."""
    return GaussianRational.coerce(x)
