"""The idempotents A^(+) and A^(*), matrix residuals, and regularity.

A^(+) is built row by row from the scalar product <x|y>, the meet of the
ratios y_i / x_i over the support of x.  It is an idempotent left identity of
A, and for matrices without zero rows it is the largest matrix B with BA = A.
A^(*) is the mirror construction through the anti-diagonal reflection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import (
    Matrix,
    Shape,
    ShapeError,
    _check_pair,
    _common,
    delta,
    diag_part,
    dom_im,
    hadamard,
    mat_mul,
    top_to_one,
    transpose,
)
from .semiring import ONE, TOP, ZERO, residual


class Unsupported(ValueError):
    """The question is outside what the library decides."""


def scalar_product(x, y):
    """<x|y>: meet of y_i * x_i^-1 over Supp(x), or ZERO unless 0 != Supp(x) <= Supp(y)."""
    if len(x) != len(y):
        raise ValueError("length mismatch")
    supp = [i for i, v in enumerate(x) if v is not ZERO]
    if not supp or any(y[i] is ZERO for i in supp):
        return ZERO
    return min(y[i] - x[i] for i in supp)


def plus_of(A: Matrix) -> Matrix:
    """(A^(+))_{i,j} = <A_{j,*} | A_{i,*}>."""
    rows = A.num
    n = A.n
    supp = [frozenset(k for k, v in enumerate(r) if v is not ZERO) for r in rows]
    out = []
    for i in range(n):
        ri, si = rows[i], supp[i]
        line = []
        for j in range(n):
            sj = supp[j]
            if not sj or not sj <= si:
                line.append(ZERO)
            else:
                rj = rows[j]
                line.append(min(ri[k] - rj[k] for k in sj))
        out.append(tuple(line))
    return Matrix.from_num(tuple(out), A.den, A.kind)


def star_of(A: Matrix) -> Matrix:
    """A^(*) = delta(delta(A)^(+)); upper triangular input only."""
    if not A.is_upper:
        raise ShapeError("star_of needs an upper triangular matrix")
    return delta(plus_of(delta(A)))


def star_transpose(A: Matrix) -> Matrix:
    """The transpose-dual of plus_of, used on families closed under transpose."""
    return transpose(plus_of(transpose(A)))


def _meet_ratios(pairs):
    """Meet of y - x over pairs with x non-zero; ZERO if some such y is ZERO."""
    best = None
    for x, y in pairs:
        if x is ZERO:
            continue
        if y is ZERO:
            return ZERO
        v = y - x
        if best is None or v < best:
            best = v
    return best


def plus_upper(A: Matrix) -> Matrix:
    """Upper triangular closed form: meet over j <= k of A_{i,k} A_{j,k}^-1."""
    A.require(Shape.FULL_DIAGONAL)
    n, a = A.n, A.num
    num = tuple(
        tuple(ZERO if j < i else _meet_ratios((a[j][k], a[i][k]) for k in range(j, n))
              for j in range(n))
        for i in range(n)
    )
    return Matrix.from_num(num, A.den, A.kind)


def star_upper(A: Matrix) -> Matrix:
    """Upper triangular closed form: meet over k <= i of A_{k,j} A_{k,i}^-1."""
    A.require(Shape.FULL_DIAGONAL)
    n, a = A.n, A.num
    num = tuple(
        tuple(ZERO if j < i else _meet_ratios((a[k][i], a[k][j]) for k in range(i + 1))
              for j in range(n))
        for i in range(n)
    )
    return Matrix.from_num(num, A.den, A.kind)


def is_idempotent(A: Matrix) -> bool:
    return mat_mul(A, A) == A


def is_idempotent_full(E: Matrix) -> bool:
    """Unit-diagonal criterion: E_{i,k} E_{k,j} <= E_{i,j} for all i, k, j."""
    n, e = E.n, E.num
    if any(e[i][i] != 0 for i in range(n)):
        return is_idempotent(E)
    for i in range(n):
        for k in range(n):
            if e[i][k] is ZERO:
                continue
            for j in range(n):
                if e[k][j] is ZERO:
                    continue
                if e[i][j] is ZERO or e[i][k] + e[k][j] > e[i][j]:
                    return False
    return True


# -- residuals over the top-extended semiring -------------------------------

def residual_left(A: Matrix, X: Matrix) -> Matrix:
    """(A \\ X)_{i,j} = meet over k of A_{k,i} \\ X_{k,j}."""
    _check_pair(A, X)
    d, a, x = _common(A, X)
    n = A.n
    out = tuple(
        tuple(min(residual(a[k][i], x[k][j]) for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return Matrix.from_num(out, d, A.kind)


def residual_right(X: Matrix, A: Matrix) -> Matrix:
    """(X / A)_{i,j} = meet over l of A_{j,l} \\ X_{i,l}."""
    _check_pair(A, X)
    d, a, x = _common(A, X)
    n = A.n
    out = tuple(
        tuple(min(residual(a[j][l], x[i][l]) for l in range(n)) for j in range(n))
        for i in range(n)
    )
    return Matrix.from_num(out, d, A.kind)


def residual_both(X: Matrix, A: Matrix, Y: Matrix) -> Matrix:
    """(X \\ A / Y)_{i,j} = meet over k, l of Y_{j,l} \\ (X_{k,i} \\ A_{k,l})."""
    _check_pair(X, A)
    _check_pair(A, Y)
    d1, x, a = _common(X, A)
    X1 = Matrix.from_num(x, d1, A.kind)
    d, y, _ = _common(Y, X1)
    x = _common(X1, Y)[1]
    a = _common(Matrix.from_num(a, d1, A.kind), Y)[1]
    n = A.n
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            best = TOP
            for k in range(n):
                for l in range(n):
                    v = residual(y[j][l], residual(x[k][i], a[k][l]))
                    if v < best:
                        best = v
            line.append(best)
        out.append(tuple(line))
    return Matrix.from_num(tuple(out), d, A.kind)


def sandwich(A: Matrix) -> Matrix:
    """A \\ A / A."""
    return residual_both(A, A, A)


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    witness: Matrix | None
    sandwich: Matrix

    def __iter__(self):
        return iter((self.regular, self.witness))


def is_regular(A: Matrix) -> RegularityResult:
    """Decide AXA = A via the sandwich residual; return a verified witness."""
    S = sandwich(A)
    if mat_mul(mat_mul(A, S), A) != A:
        return RegularityResult(False, None, S)
    W = top_to_one(S)
    if mat_mul(mat_mul(A, W), A) != A:
        raise AssertionError("top replacement broke the sandwich identity")
    return RegularityResult(True, W, S)


def left_divides(X: Matrix, A: Matrix) -> bool:
    """X <=_R A, i.e. X = A Y for some Y, via A(A \\ X) = X."""
    return mat_mul(A, residual_left(A, X)) == X


def right_divides(X: Matrix, A: Matrix) -> bool:
    """X <=_L A, i.e. X = Y A for some Y, via (X / A) A = X."""
    return mat_mul(residual_right(X, A), A) == X


# -- tilde relations on the full-diagonal and dom = [n] scopes --------------

def _in_scope(A: Matrix, scope: str) -> bool:
    if scope == "full":
        return Shape.FULL_DIAGONAL in A.shapes
    if scope == "dom":
        return len(dom_im(A)[0]) == A.n
    if scope == "im":
        return len(dom_im(A)[1]) == A.n
    raise ValueError(f"unknown scope {scope!r}")


def rtilde_related(A: Matrix, B: Matrix, scope: str = "full") -> bool:
    """A ~R B by comparing A^(+) and B^(+).

    ``scope="full"``: both upper triangular with full diagonal.
    ``scope="dom"``: both without zero rows; this decides the relation taken
    relative to the unit-diagonal idempotents.
    """
    _check_pair(A, B)
    if not (_in_scope(A, scope) and _in_scope(B, scope)):
        raise Unsupported(f"inputs outside the {scope!r} scope")
    return plus_of(A) == plus_of(B)


def ltilde_related(A: Matrix, B: Matrix, scope: str = "full") -> bool:
    _check_pair(A, B)
    if scope == "full":
        if not (_in_scope(A, "full") and _in_scope(B, "full")):
            raise Unsupported("inputs outside the 'full' scope")
        return star_of(A) == star_of(B)
    if scope == "dom":
        if not (_in_scope(A, "im") and _in_scope(B, "im")):
            raise Unsupported("inputs have zero columns")
        return star_transpose(A) == star_transpose(B)
    raise ValueError(f"unknown scope {scope!r}")


# -- alpha / beta parameters ------------------------------------------------

def right_normalize(A: Matrix) -> Matrix:
    """A D_A^-1: entries A_{i,j} A_{j,j}^-1."""
    A.require(Shape.FULL_DIAGONAL)
    a, n = A.num, A.n
    num = tuple(
        tuple(ZERO if a[i][j] is ZERO else a[i][j] - a[j][j] for j in range(n)) for i in range(n)
    )
    return Matrix.from_num(num, A.den, A.kind)


def left_normalize(A: Matrix) -> Matrix:
    """D_A^-1 A: entries A_{i,i}^-1 A_{i,j}."""
    A.require(Shape.FULL_DIAGONAL)
    a, n = A.num, A.n
    num = tuple(
        tuple(ZERO if a[i][j] is ZERO else a[i][j] - a[i][i] for j in range(n)) for i in range(n)
    )
    return Matrix.from_num(num, A.den, A.kind)


class DecompositionError(ValueError):
    pass


def _ratio_matrix(A: Matrix, E: Matrix, left: bool) -> Matrix:
    _check_pair(A, E)
    d, a, e = _common(A, E)
    n = A.n
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            if j < i:
                line.append(ZERO)
                continue
            if a[i][j] is ZERO or e[i][j] is ZERO:
                raise DecompositionError("alpha/beta need positive upper matrices")
            scale = a[i][i] if left else a[j][j]
            line.append(a[i][j] - e[i][j] - scale)
        out.append(tuple(line))
    return Matrix.from_num(tuple(out), d, A.kind)


@dataclass(frozen=True)
class AlphaBeta:
    alpha: Matrix | None
    beta: Matrix | None


def alpha_of(A: Matrix, E: Matrix | None = None) -> Matrix:
    """alpha with A_{i,j} = E_{i,j} A_{j,j} alpha_{i,j}, where E = A^(+)."""
    A.require(Shape.POSITIVE_UPPER)
    if E is None:
        E = plus_of(A)
    elif plus_of(A) != E:
        raise DecompositionError("E is not A^(+)")
    alpha = _ratio_matrix(A, E, left=False)
    n = A.n
    if any(alpha[i, j] < ONE for i in range(n) for j in range(i, n)):
        raise DecompositionError("alpha below ONE")
    if any(alpha[i, i] != ONE or alpha[i, n - 1] != ONE for i in range(n)):
        raise DecompositionError("alpha is not ONE on the diagonal and last column")
    if mat_mul(hadamard(E, alpha), diag_part(A)) != A:
        raise DecompositionError("alpha does not recompose A")
    return alpha


def beta_of(A: Matrix, E: Matrix | None = None) -> Matrix:
    """beta with A_{i,j} = A_{i,i} E_{i,j} beta_{i,j}, where E = A^(*)."""
    A.require(Shape.POSITIVE_UPPER)
    if E is None:
        E = star_of(A)
    elif star_of(A) != E:
        raise DecompositionError("E is not A^(*)")
    beta = _ratio_matrix(A, E, left=True)
    n = A.n
    if any(beta[i, j] < ONE for i in range(n) for j in range(i, n)):
        raise DecompositionError("beta below ONE")
    if any(beta[i, i] != ONE or beta[0, i] != ONE for i in range(n)):
        raise DecompositionError("beta is not ONE on the diagonal and first row")
    if mat_mul(diag_part(A), hadamard(E, beta)) != A:
        raise DecompositionError("beta does not recompose A")
    return beta


def alpha_beta_decompose(A: Matrix, E: Matrix) -> AlphaBeta:
    """Both parameter matrices relative to E, whichever of them is defined.

    The parameters of A agree with those of its right (for alpha) and left
    (for beta) normal forms; this is checked on the way.
    """
    alpha = beta = None
    if plus_of(A) == E:
        alpha = alpha_of(A, E)
        if alpha_of(right_normalize(A), E) != alpha:
            raise DecompositionError("alpha differs from that of the right normal form")
    if star_of(A) == E:
        beta = beta_of(A, E)
        if beta_of(left_normalize(A), E) != beta:
            raise DecompositionError("beta differs from that of the left normal form")
    if alpha is None and beta is None:
        raise DecompositionError("E is neither A^(+) nor A^(*)")
    return AlphaBeta(alpha, beta)
