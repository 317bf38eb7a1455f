from fractions import Fraction

import pytest
from hypothesis import given

from conftest import matrices
from tropgreen.matrix import (
    Matrix, Shape, ShapeError, bool_matrix, bool_unique_basis, delta, from_bits, identity,
    leq, mat_mul, to_bits, transpose,
)
from tropgreen.semiring import ONE, ZERO, Kind

X = ZERO


def test_product_small_example():
    A = Matrix([[0, 1], [X, 2]])
    B = Matrix([[3, X], [0, 0]])
    assert mat_mul(A, B) == Matrix([[3, 1], [2, 2]])


@given(matrices(n=3), matrices(n=3), matrices(n=3))
def test_product_associative(A, B, C):
    assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))


@given(matrices())
def test_identity(A):
    I = identity(A.n)
    assert mat_mul(I, A) == A == mat_mul(A, I)


@given(matrices(n=3, upper=True), matrices(n=3, upper=True))
def test_delta_is_an_anti_automorphism(A, B):
    assert delta(mat_mul(A, B)) == mat_mul(delta(B), delta(A))
    assert delta(delta(A)) == A
    assert transpose(transpose(A)) == A


def test_common_denominator_is_reduced():
    A = Matrix([[Fraction(1, 2), Fraction(1, 3)], [X, Fraction(1, 6)]])
    assert A.den == 6
    assert A[0, 1] == Fraction(1, 3)
    assert A == Matrix([[Fraction(3, 6), Fraction(2, 6)], [X, Fraction(1, 6)]])


def test_shapes():
    U = Matrix([[0, 1], [X, 0]])
    assert {Shape.UPPER, Shape.FULL_DIAGONAL, Shape.UNITRIANGULAR, Shape.POSITIVE_UPPER} <= U.shapes
    # positive means no zero entry on or above the diagonal
    assert Shape.POSITIVE_UPPER in Matrix([[0, -1], [X, 0]]).shapes
    assert Shape.POSITIVE_UPPER not in Matrix([[0, X], [X, 0]]).shapes
    assert not Matrix([[0, X], [1, 0]]).is_upper
    with pytest.raises(ShapeError):
        Matrix([[0, 1], [X, 2]], shape=Shape.UNITRIANGULAR)


def test_leq():
    assert leq(Matrix([[0, X], [X, 0]]), Matrix([[0, 1], [X, 0]]))
    assert not leq(Matrix([[1]]), Matrix([[0]]))


def test_bits_round_trip():
    for bits in range(16):
        A = from_bits(bits, 2)
        assert A.kind is Kind.BOOLEAN
        assert to_bits(A) == bits


def test_boolean_product():
    A = bool_matrix([[1, 1], [0, 1]])
    assert mat_mul(A, A) == A
    assert A[1, 0] is ZERO and A[0, 0] == ONE


def test_unique_basis_example():
    assert sorted(bool_unique_basis([(0, 1, 1), (1, 1, 1)])) == [(0, 1, 1), (1, 1, 1)]
    assert sorted(bool_unique_basis([(1, 0), (0, 1), (1, 1)])) == [(0, 1), (1, 0)]


def test_non_square_rejected():
    with pytest.raises(ValueError):
        Matrix([[0, 1]])
