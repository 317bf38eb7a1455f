import pytest
from hypothesis import given

from conftest import matrices
from tropgreen import generators as gen
from tropgreen.factorization import (
    aperiodicity_check, ef_power_identities, factor_matrix, full_decompose, idempotent_factorize,
    meet_idempotent, normal_form, semidirect_law_check,
)
from tropgreen.matrix import Matrix, Shape, ShapeError, bool_matrix, identity, leq, mat_mul
from tropgreen.plusstar import is_idempotent
from tropgreen.semiring import ZERO

X = ZERO


def test_normal_form_example():
    nf = normal_form(Matrix([[2, 5], [X, 1]]))
    assert nf.d == Matrix([[2, X], [X, 1]])
    assert nf.rnorm == Matrix([[0, 4], [X, 0]])
    assert nf.lnorm == Matrix([[0, 3], [X, 0]])


def test_normal_form_needs_full_diagonal():
    with pytest.raises(ShapeError):
        normal_form(Matrix([[X, 1], [X, 0]]))


def test_boolean_factor_example():
    B = bool_matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    M = meet_idempotent(B)
    assert M == identity(3, B.kind)
    assert factor_matrix(B, M, 3) == bool_matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    assert factor_matrix(B, M, 2) == bool_matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert idempotent_factorize(B).product() == B


@given(matrices(upper=True, unit=True, max_n=6))
def test_factorization_round_trip(A):
    res = idempotent_factorize(A)
    M = res.meet_idempotent
    assert is_idempotent(M) and leq(M, A)
    assert mat_mul(M, A) == A == mat_mul(A, M)
    assert len(res.factors) == max(A.n - 1, 0)
    assert all(is_idempotent(F) for F in res.factors)
    if A.n > 1:
        assert res.product() == A


@given(matrices(upper=True, unit=True, positive=True, max_n=5))
def test_factors_of_positive_matrices_are_positive(A):
    for F in idempotent_factorize(A).factors:
        assert Shape.POSITIVE_UPPER in F.shapes


@given(matrices(upper=True, max_n=5))
def test_full_decomposition(A):
    res = full_decompose(A)
    if A.n > 1:
        assert res.product() == A


@given(matrices(upper=True, n=3), matrices(upper=True, n=3))
def test_semidirect_law(A, B):
    assert semidirect_law_check(A, B)


def test_ef_power_law(rng):
    for _ in range(50):
        E = gen.idempotent_unitriangular(rng, 4)
        F = gen.idempotent_unitriangular(rng, 4)
        assert ef_power_identities(E, F, 3).verified


def test_aperiodicity():
    G = Matrix([[0, 1, X, X], [X, 0, 1, X], [X, X, 0, 1], [X, X, X, 0]])
    assert aperiodicity_check(G) == 3
    assert aperiodicity_check(identity(4)) == 1


@given(matrices(upper=True, unit=True, max_n=6))
def test_aperiodicity_bound(A):
    assert aperiodicity_check(A) <= max(A.n - 1, 1)
