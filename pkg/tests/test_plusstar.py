import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import finite, matrices
from tropgreen import generators as gen
from tropgreen.matrix import Matrix, bool_matrix, dom_im, from_bits, identity, leq, mat_mul, scale
from tropgreen.plusstar import (
    Unsupported, is_idempotent, is_regular, left_divides, ltilde_related, plus_of, plus_upper,
    residual_left, residual_right, rtilde_related, sandwich, scalar_product, star_of, star_upper,
)
from tropgreen.semiring import ZERO

X = ZERO


def test_scalar_product_example():
    assert scalar_product((Fraction(0), Fraction(0)), (Fraction(1), Fraction(2))) == 1
    assert scalar_product((X, X), (Fraction(1), Fraction(2))) is ZERO
    assert scalar_product((Fraction(0), Fraction(0)), (Fraction(1), X)) is ZERO


@given(st.lists(finite, min_size=1, max_size=5))
def test_scalar_product_with_itself_is_one(x):
    assert scalar_product(x, x) == 0


@given(matrices(upper=True))
def test_closed_forms_match_the_scalar_product_route(A):
    assert plus_upper(A) == plus_of(A)
    assert star_upper(A) == star_of(A)


@given(matrices())
def test_plus_is_the_residual_when_rows_are_non_zero(A):
    assume(len(dom_im(A)[0]) == A.n)
    assert plus_of(A) == residual_right(A, A)


@given(matrices())
def test_plus_is_an_idempotent_left_identity(A):
    assume(len(dom_im(A)[0]) == A.n)
    E = plus_of(A)
    assert is_idempotent(E)
    assert mat_mul(E, A) == A


@given(matrices(upper=True))
def test_star_is_an_idempotent_right_identity(A):
    S = star_of(A)
    assert is_idempotent(S)
    assert mat_mul(A, S) == A


def test_boolean_plus_example():
    A = bool_matrix([[1, 1, 1], [0, 0, 1], [0, 0, 1]])
    assert plus_of(A) == bool_matrix([[1, 1, 1], [0, 1, 1], [0, 1, 1]])


def test_idempotent_is_its_own_plus_and_star(rng):
    for _ in range(100):
        E = gen.idempotent_unitriangular(rng, rng.randint(2, 5))
        assert plus_of(E) == E == star_of(E)


def test_all_g_unitriangular_is_not_idempotent():
    G = Matrix([[0, 1, 1], [X, 0, 1], [X, X, 0]])
    assert not is_idempotent(G)
    assert is_idempotent(identity(3))


@given(matrices(max_n=3))
def test_sandwich_inequality(A):
    assert leq(mat_mul(mat_mul(A, sandwich(A)), A), A)


def test_residual_by_identity(rng):
    for _ in range(20):
        B = gen.general(rng, 3)
        assert residual_left(identity(3), B) == B


def test_right_divisibility_matches_brute_force():
    # X <=_R A iff X = A Y for some Boolean Y; checked over all 2x2 pairs
    mats = [from_bits(b, 2) for b in range(16)]
    for A in mats:
        right_multiples = {mat_mul(A, Y) for Y in mats}
        for Xm in mats:
            assert left_divides(Xm, A) == (Xm in right_multiples)


def test_regular_witness_is_verified():
    for b in range(16):
        A = from_bits(b, 2)
        r = is_regular(A)
        assert r.regular
        assert mat_mul(mat_mul(A, r.witness), A) == A


@given(finite, finite, finite)
def test_two_by_two_upper_inverse(a, b, d):
    A = Matrix([[a, b], [X, d]])
    inv = Matrix([[-a, b - a - d], [X, -d]])
    # the inverse satisfies A A' A = A and A' A A' = A'
    assert mat_mul(mat_mul(A, inv), A) == A
    assert mat_mul(mat_mul(inv, A), inv) == inv
    assert is_regular(A).regular


def test_all_g_matrix_not_regular():
    for g in (Fraction(1), Fraction(5, 2)):
        G = Matrix([[0, g, g], [X, 0, g], [X, X, 0]])
        assert not is_regular(G).regular


@given(matrices(upper=True), st.lists(finite, min_size=5, max_size=5))
def test_rtilde_is_invariant_under_diagonal_scaling(A, d):
    D = Matrix([[d[i] if i == j else X for j in range(A.n)] for i in range(A.n)])
    assert rtilde_related(A, mat_mul(A, D))
    assert ltilde_related(A, mat_mul(D, A))
    assert rtilde_related(A, plus_of(A))


def test_boolean_rtilde_example():
    X1 = bool_matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert rtilde_related(X1, bool_matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]]))


def test_rtilde_outside_scope():
    with pytest.raises(Unsupported):
        rtilde_related(Matrix([[0, X], [1, 0]]), identity(2))
