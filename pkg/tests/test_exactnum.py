"""Field arithmetic and string round-trips for the exact scalars."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liesmash.exactnum import GaussianRational, I, ONE, ZERO, gq

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
scalars = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    a = gq(Fraction(1, 2), Fraction(1, 3))
    b = gq(2, -1)
    assert a + b == gq(Fraction(5, 2), Fraction(-2, 3))
    assert a * b == gq(Fraction(1, 2) * 2 + Fraction(1, 3), Fraction(2, 3) - Fraction(1, 2))
    assert I * I == gq(-1)
    assert (a / a) == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(scalars)
def test_multiplicative_inverse(a):
    if a:
        assert a * (ONE / a) == ONE
    assert a + (-a) == ZERO


@given(scalars)
def test_conjugate_and_modulus(a):
    assert (a * a.conjugate()).re == a.modulus_sq()
    assert (a * a.conjugate()).im == 0


@given(scalars)
def test_str_parse_roundtrip(a):
    assert GaussianRational.parse(str(a)) == a


@pytest.mark.parametrize("text,expected", [
    ("3", gq(3)),
    ("-1/2", gq(Fraction(-1, 2))),
    ("1/2+1/3*i", gq(Fraction(1, 2), Fraction(1, 3))),
    ("0+1*i", I),
    ("i", I),
    ("-i", -I),
    ("2-3/4*i", gq(2, Fraction(-3, 4))),
])
def test_parse_forms(text, expected):
    assert GaussianRational.parse(text) == expected


def test_parse_rejects_garbage():
    for bad in ("", "x", "1+2", "1//2", "i*i"):
        with pytest.raises(ValueError):
            GaussianRational.parse(bad)


def test_abs_rational_needs_real():
    assert gq(Fraction(-3, 4)).abs_rational() == Fraction(3, 4)
    with pytest.raises(ValueError):
        I.abs_rational()
