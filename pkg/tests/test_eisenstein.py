from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilfiber.eisenstein import (
    MU3,
    OMEGA,
    OMEGA2,
    EisensteinNumber,
    ParseError,
    parse_eisenstein,
)

rationals_64 = st.builds(
    Fraction,
    st.integers(min_value=-(2**64), max_value=2**64),
    st.integers(min_value=1, max_value=2**64),
)
eisensteins = st.builds(EisensteinNumber, rationals_64, rationals_64)


def test_omega_squared():
    assert OMEGA * OMEGA == EisensteinNumber(-1, -1)
    assert OMEGA * OMEGA == OMEGA2


def test_omega_is_cube_root_of_unity():
    assert OMEGA**3 == EisensteinNumber(1)
    assert EisensteinNumber(1) + OMEGA + OMEGA**2 == EisensteinNumber(0)


def test_unit_product():
    # (1 + w) * (-w) = 1 because 1 + w^2 = -w
    assert (EisensteinNumber(1) + OMEGA) * (-OMEGA) == EisensteinNumber(1)


def test_self_division():
    x = EisensteinNumber(1, 2)
    assert x / x == EisensteinNumber(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        EisensteinNumber(1) / EisensteinNumber(0)
    with pytest.raises(ZeroDivisionError):
        EisensteinNumber(0).inverse()


@pytest.mark.parametrize(
    "text,re_,wc",
    [
        ("1/2+3*w", Fraction(1, 2), Fraction(3)),
        ("-w", Fraction(0), Fraction(-1)),
        ("7", Fraction(7), Fraction(0)),
        ("w", Fraction(0), Fraction(1)),
        ("5*w", Fraction(0), Fraction(5)),
        ("-2/3*w", Fraction(0), Fraction(-2, 3)),
        ("1/2-w", Fraction(1, 2), Fraction(-1)),
        ("-1/2+w", Fraction(-1, 2), Fraction(1)),
        ("0", Fraction(0), Fraction(0)),
    ],
)
def test_parse_examples(text, re_, wc):
    value = parse_eisenstein(text)
    assert value.re == re_ and value.wc == wc


@pytest.mark.parametrize("text,pos", [("1/2+", 4), ("x", 0), ("1//2", 1), ("3/0", 0), ("1+2", 3), ("w3", 1)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as err:
        parse_eisenstein(text)
    assert err.value.position == pos


@settings(max_examples=1000, deadline=None)
@given(eisensteins)
def test_print_parse_roundtrip(x):
    assert parse_eisenstein(str(x)) == x


@settings(max_examples=200, deadline=None)
@given(eisensteins)
def test_inverse(x):
    if x:
        assert x * x.inverse() == EisensteinNumber(1)


@settings(max_examples=200, deadline=None)
@given(eisensteins)
def test_conjugate_gives_norm(x):
    product = x * x.conj()
    assert product.wc == 0
    assert product.re == x.norm()
    assert x.norm() >= 0
    assert (x.norm() == 0) == (not x)


@settings(max_examples=200, deadline=None)
@given(eisensteins, eisensteins, eisensteins)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


def test_mu3_membership():
    for zeta in MU3:
        assert zeta**3 == EisensteinNumber(1)
    assert len(set(MU3)) == 3
