from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import finite, value
from tropgreen.semiring import (
    ONE, TOP, ZERO, Kind, add, div, format_value, inv, meet, mul, parse_value, power, residual,
)


@given(value, value, value)
def test_addition_is_a_semilattice(a, b, c):
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, a) == a
    assert add(a, ZERO) == a


@given(value, value, value)
def test_multiplication_distributes(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert mul(a, ONE) == a
    assert mul(a, ZERO) is ZERO


@given(finite)
def test_inverse(a):
    assert mul(a, inv(a)) == ONE
    assert div(a, a) == ONE


@given(value, value, st.one_of(finite, st.just(ZERO)))
def test_residual_is_the_largest_solution(a, b, x):
    r = residual(a, b)
    # a r <= b, and any x with a x <= b lies below r
    if r is not TOP:
        assert add(mul(a, r), b) == b
    if add(mul(a, x), b) == b:
        assert r is TOP or add(x, r) == r


def test_residual_edge_cases():
    assert residual(ZERO, Fraction(3)) is TOP
    assert residual(Fraction(1), ZERO) is ZERO
    assert residual(Fraction(1), Fraction(3)) == 2


@given(finite, st.integers(0, 5))
def test_power(a, k):
    assert power(a, k) == a * k


@given(value)
def test_maxplus_format_round_trip(a):
    assert parse_value(format_value(a, Kind.MAXPLUS), Kind.MAXPLUS) == a


def test_boolean_values():
    assert parse_value("1", Kind.BOOLEAN) == ONE
    assert parse_value("0", Kind.BOOLEAN) is ZERO
    assert format_value(ONE, Kind.BOOLEAN) == "1"
    with pytest.raises(ValueError):
        parse_value("2", Kind.BOOLEAN)


def test_meet():
    assert meet(Fraction(1), Fraction(2)) == 1
    assert meet(ZERO, Fraction(2)) is ZERO


@pytest.mark.parametrize("tok", ["abc", "1.5", "1/0", ""])
def test_bad_tokens(tok):
    with pytest.raises(ValueError):
        parse_value(tok, Kind.MAXPLUS)
