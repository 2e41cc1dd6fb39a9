from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieradicals.errors import ScalarParseError
from lieradicals.scalars import I, ONE, ZERO, GaussianRational, parse_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 3), -1)
    assert a + b == GaussianRational(Fraction(4, 3), 1)
    assert a * b == GaussianRational(Fraction(1, 3) + 2, Fraction(2, 3) - 1)
    assert I * I == -ONE
    assert a - a == ZERO


def test_inverse_and_division():
    z = GaussianRational(3, 4)
    assert z * z.inverse() == ONE
    assert z.inverse() == GaussianRational(Fraction(3, 25), Fraction(-4, 25))
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conjugate_and_realness():
    z = GaussianRational(2, -5)
    assert z.conjugate() == GaussianRational(2, 5)
    assert (z * z.conjugate()).is_real
    assert not z.is_real


@pytest.mark.parametrize("text, value", [
    ("0", ZERO),
    ("1", ONE),
    ("i", I),
    ("-i", -I),
    ("3/4", GaussianRational(Fraction(3, 4))),
    ("1+2i", GaussianRational(1, 2)),
    ("-6/5+3/5*i", GaussianRational(Fraction(-6, 5), Fraction(3, 5))),
    ("  2 - i ", GaussianRational(2, -1)),
])
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1+", "2ii", "1.5.2"])
def test_parse_rejects(bad):
    with pytest.raises(ScalarParseError):
        parse_scalar(bad)


def test_text_format():
    assert str(I) == "0+1*i"
    assert str(GaussianRational(Fraction(-6, 5), Fraction(3, 5))) == "-6/5+3/5*i"
    assert str(GaussianRational(7)) == "7"


@given(gaussians)
def test_str_round_trips(z):
    assert parse_scalar(str(z)) == z


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == ONE


@given(gaussians)
def test_hash_matches_equality(z):
    w = GaussianRational(z.re, z.im)
    assert z == w and hash(z) == hash(w)
