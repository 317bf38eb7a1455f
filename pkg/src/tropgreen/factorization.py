"""Triangular normal forms and idempotent factorisations of unitriangular matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import (
    Matrix,
    Shape,
    diag_inverse,
    diag_part,
    leq,
    mat_mul,
    meet,
    product,
)
from .plusstar import is_idempotent, left_normalize, plus_of, right_normalize, star_of
from .semiring import ZERO


@dataclass(frozen=True)
class TriangularNormalForm:
    d: Matrix
    rnorm: Matrix
    lnorm: Matrix


def normal_form(A: Matrix) -> TriangularNormalForm:
    """A = rnorm D_A = D_A lnorm with rnorm, lnorm unitriangular."""
    A.require(Shape.FULL_DIAGONAL)
    D = diag_part(A)
    nf = TriangularNormalForm(D, right_normalize(A), left_normalize(A))
    if mat_mul(nf.rnorm, D) != A or mat_mul(D, nf.lnorm) != A:
        raise AssertionError("normal form does not reconstruct A")
    return nf


def meet_idempotent(X: Matrix) -> Matrix:
    """The entrywise meet of X^(+) and X^(*) for unitriangular X."""
    X.require(Shape.UNITRIANGULAR)
    return meet(plus_of(X), star_of(X))


def factor_matrix(X: Matrix, meetX: Matrix, h: int) -> Matrix:
    """X(h): X on the block i < h <= j (1-based), the meet idempotent elsewhere."""
    n = X.n
    rows = [
        [X[i, j] if (i + 1 < h <= j + 1) else meetX[i, j] for j in range(n)]
        for i in range(n)
    ]
    return Matrix(rows, X.kind)


def x_vector(X: Matrix, meetX: Matrix, j: int, h: int) -> tuple:
    """Column x(j, h): rows above h from column j of X, the rest from the meet idempotent."""
    return tuple(X[i, j - 1] if i + 1 < h else meetX[i, j - 1] for i in range(X.n))


def y_vector(meetX: Matrix, j: int, h: int) -> tuple:
    return tuple(meetX[i, j - 1] if i + 1 < h else ZERO for i in range(meetX.n))


def act(M: Matrix, v: tuple) -> tuple:
    """Matrix times column vector."""
    out = []
    for i in range(M.n):
        best = ZERO
        for k in range(M.n):
            a, b = M[i, k], v[k]
            if a is ZERO or b is ZERO:
                continue
            s = a + b
            if best is ZERO or s > best:
                best = s
        out.append(best)
    return tuple(out)


@dataclass(frozen=True)
class FactorizationResult:
    factors: tuple
    meet_idempotent: Matrix
    diagonal: Matrix | None = None

    def product(self) -> Matrix:
        out = product(list(self.factors))
        if self.diagonal is not None:
            out = mat_mul(out, self.diagonal)
        return out


def idempotent_factorize(X: Matrix) -> FactorizationResult:
    """X = X(n) X(n-1) ... X(2), each factor idempotent; n = 1 gives the empty list."""
    X.require(Shape.UNITRIANGULAR)
    n = X.n
    M = meet_idempotent(X)
    factors = tuple(factor_matrix(X, M, h) for h in range(n, 1, -1))
    result = FactorizationResult(factors, M)
    if n > 1:
        if not all(is_idempotent(F) for F in factors):
            raise AssertionError("a factor is not idempotent")
        if result.product() != X:
            raise AssertionError("factors do not multiply to X")
    return result


def full_decompose(A: Matrix) -> FactorizationResult:
    """A = X(n) ... X(2) D_A, factorising the right normal form of A."""
    nf = normal_form(A)
    inner = idempotent_factorize(nf.rnorm)
    result = FactorizationResult(inner.factors, inner.meet_idempotent, nf.d)
    if A.n > 1 and result.product() != A:
        raise AssertionError("decomposition does not reconstruct A")
    return result


def semidirect_law_check(A: Matrix, B: Matrix) -> bool:
    """AB = (A' D_A B' D_A^-1)(D_A D_B) with A', B' the right normal forms."""
    na, nb = normal_form(A), normal_form(B)
    Da, Db = na.d, nb.d
    left = product([na.rnorm, Da, nb.rnorm, diag_inverse(Da)])
    if Shape.UNITRIANGULAR not in left.shapes:
        return False
    return mat_mul(A, B) == mat_mul(left, mat_mul(Da, Db))


@dataclass(frozen=True)
class EFPowerReport:
    n: int
    m: int
    threshold_met: bool
    products: dict
    all_equal: bool

    @property
    def verified(self) -> bool:
        return self.threshold_met and self.all_equal


def ef_power_identities(E: Matrix, F: Matrix, m: int) -> EFPowerReport:
    """Compare (EF)^m, (EF)^m E, E(FE)^m, (FE)^m F, F(EF)^m and (FE)^m.

    The six agree whenever 2m >= n + 1; below that the report is diagnostic.
    """
    for M in (E, F):
        M.require(Shape.FULL_DIAGONAL)
        if not is_idempotent(M):
            raise ValueError("E and F must be idempotent")
    if m < 1:
        raise ValueError("m must be positive")
    EF, FE = mat_mul(E, F), mat_mul(F, E)
    efm = product([EF] * m)
    fem = product([FE] * m)
    prods = {
        "(EF)^m": efm,
        "(EF)^m E": mat_mul(efm, E),
        "E(FE)^m": mat_mul(E, fem),
        "(FE)^m F": mat_mul(fem, F),
        "F(EF)^m": mat_mul(F, efm),
        "(FE)^m": fem,
    }
    first = prods["(EF)^m"]
    return EFPowerReport(E.n, m, 2 * m >= E.n + 1, prods,
                         all(P == first for P in prods.values()))


def aperiodicity_check(X: Matrix) -> int:
    """Least k with X^k = X^(k+1); checks the chain X <= X^2 <= ... and k <= n - 1."""
    X.require(Shape.UNITRIANGULAR)
    n = X.n
    P, k = X, 1
    while True:
        Q = mat_mul(P, X)
        if not leq(P, Q):
            raise AssertionError("powers are not increasing")
        if Q == P:
            break
        P, k = Q, k + 1
        if k > n:
            raise AssertionError("powers did not stabilise")
    if k > max(1, n - 1):
        raise AssertionError(f"index {k} exceeds n - 1")
    return k
