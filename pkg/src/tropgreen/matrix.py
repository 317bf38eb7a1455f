"""Dense square matrices over the Boolean or max-plus semifield.

Finite entries are stored as integer numerators over one positive denominator
shared by the whole matrix (``num``/``den``).  Max-plus products only add and
compare entries, so the integer form is exact and much faster than doing the
same work with ``Fraction`` objects.  The denominator is kept minimal, which
makes equality structural.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .semiring import ONE, TOP, ZERO, Kind, KindMismatch, coerce


class Shape(enum.Enum):
    GENERAL = "general"
    UPPER = "upper"
    FULL_DIAGONAL = "full"
    UNITRIANGULAR = "unitriangular"
    POSITIVE_UPPER = "positive"

    @classmethod
    def parse(cls, text: str) -> "Shape":
        for s in cls:
            if s.value == text or s.name.lower() == text.lower():
                return s
        raise ValueError(f"unknown shape {text!r}")


class ShapeError(ValueError):
    pass


def _scale(num, factor):
    if factor == 1:
        return num
    return tuple(
        tuple(v * factor if (v is not ZERO and v is not TOP) else v for v in row)
        for row in num
    )


def _normalize(num, den):
    finite = [v for row in num for v in row if v is not ZERO and v is not TOP]
    g = math.gcd(den, *finite) if finite else den
    if g > 1:
        den //= g
        num = tuple(
            tuple(v // g if (v is not ZERO and v is not TOP) else v for v in row)
            for row in num
        )
    return num, den


class Matrix:
    """Immutable n x n matrix; ``A[i, j]`` returns a semiring value (0-based)."""

    __slots__ = ("num", "den", "kind", "n", "_hash", "_shapes")

    def __init__(self, rows: Iterable[Sequence], kind: Kind = Kind.MAXPLUS,
                 shape: Shape | None = None, extended: bool = False):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        values = [[coerce(v, kind, extended) for v in r] for r in rows]
        den = 1
        for r in values:
            for v in r:
                if v is not ZERO and v is not TOP:
                    den = math.lcm(den, v.denominator)
        num = tuple(
            tuple(v if (v is ZERO or v is TOP) else int(v * den) for v in r)
            for r in values
        )
        self._set(num, den, kind)
        if shape is not None:
            self.require(shape)

    def _set(self, num, den, kind):
        num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self.kind = kind
        self.n = len(num)
        self._hash = None
        self._shapes = None

    @classmethod
    def from_num(cls, num, den: int, kind: Kind) -> "Matrix":
        obj = cls.__new__(cls)
        obj._set(tuple(tuple(r) for r in num), den, kind)
        return obj

    # -- access -----------------------------------------------------------
    def _value(self, v):
        if v is ZERO or v is TOP:
            return v
        return Fraction(v, self.den)

    def __getitem__(self, ij):
        i, j = ij
        return self._value(self.num[i][j])

    @property
    def rows(self) -> tuple:
        return tuple(tuple(self._value(v) for v in r) for r in self.num)

    def row(self, i: int) -> tuple:
        return tuple(self._value(v) for v in self.num[i])

    def col(self, j: int) -> tuple:
        return tuple(self._value(r[j]) for r in self.num)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.kind is other.kind and self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.kind, self.den, self.num))
        return self._hash

    def __repr__(self):
        from .semiring import format_value
        body = "; ".join(" ".join(format_value(v, self.kind) for v in r) for r in self.rows)
        return f"Matrix[{self.kind.value}]({body})"

    def __matmul__(self, other):
        return mat_mul(self, other)

    def has_top(self) -> bool:
        return any(v is TOP for r in self.num for v in r)

    # -- shapes -----------------------------------------------------------
    @property
    def shapes(self) -> frozenset:
        if self._shapes is None:
            self._shapes = frozenset(_compute_shapes(self))
        return self._shapes

    def has_shape(self, shape: Shape) -> bool:
        return shape in self.shapes

    def require(self, *shapes: Shape) -> "Matrix":
        for s in shapes:
            if s not in self.shapes:
                raise ShapeError(f"matrix is not {s.value}")
        return self

    @property
    def is_upper(self) -> bool:
        return Shape.UPPER in self.shapes


def _compute_shapes(A: Matrix):
    out = {Shape.GENERAL}
    num, n = A.num, A.n
    if any(num[i][j] is not ZERO for i in range(n) for j in range(i)):
        return out
    out.add(Shape.UPPER)
    diag = [num[i][i] for i in range(n)]
    if all(d is not ZERO and d is not TOP for d in diag):
        out.add(Shape.FULL_DIAGONAL)
        if all(d == 0 for d in diag):
            out.add(Shape.UNITRIANGULAR)
    if all(num[i][j] is not ZERO and num[i][j] is not TOP
           for i in range(n) for j in range(i, n)):
        out.add(Shape.POSITIVE_UPPER)
    return out


# -- constructors -----------------------------------------------------------

def identity(n: int, kind: Kind = Kind.MAXPLUS) -> Matrix:
    num = tuple(tuple(0 if i == j else ZERO for j in range(n)) for i in range(n))
    return Matrix.from_num(num, 1, kind)


def zeros(n: int, kind: Kind = Kind.MAXPLUS) -> Matrix:
    return Matrix.from_num(((ZERO,) * n,) * n, 1, kind)


def diagonal(values: Sequence, kind: Kind = Kind.MAXPLUS) -> Matrix:
    n = len(values)
    return Matrix([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)], kind)


def unit_matrix(n: int, kind: Kind = Kind.MAXPLUS) -> Matrix:
    """The matrix with every entry equal to ONE."""
    return Matrix.from_num(((0,) * n,) * n, 1, kind)


def bracket(n: int, i: int, j: int, alpha, kind: Kind = Kind.MAXPLUS) -> Matrix:
    """[alpha]_{i,j}: alpha at (i, j) and ONE at every other entry."""
    rows = [[ONE] * n for _ in range(n)]
    rows[i][j] = alpha
    return Matrix(rows, kind)


# -- binary operations ------------------------------------------------------

def _check_pair(A: Matrix, B: Matrix):
    if A.kind is not B.kind:
        raise KindMismatch(f"cannot combine {A.kind.value} and {B.kind.value} matrices")
    if A.n != B.n:
        raise ValueError(f"dimension mismatch {A.n} vs {B.n}")


def _common(A: Matrix, B: Matrix):
    if A.den == B.den:
        return A.den, A.num, B.num
    d = math.lcm(A.den, B.den)
    return d, _scale(A.num, d // A.den), _scale(B.num, d // B.den)


def _dot(r, c):
    best = ZERO
    for a, b in zip(r, c):
        if a is ZERO or b is ZERO:
            continue
        s = TOP if (a is TOP or b is TOP) else a + b
        if best is ZERO or s > best:
            best = s
    return best


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    d, a, b = _common(A, B)
    cols = tuple(zip(*b))
    out = tuple(tuple(_dot(r, c) for c in cols) for r in a)
    return Matrix.from_num(out, d, A.kind)


def product(mats: Sequence[Matrix]) -> Matrix:
    out = mats[0]
    for M in mats[1:]:
        out = mat_mul(out, M)
    return out


def power(A: Matrix, k: int) -> Matrix:
    if k < 1:
        return identity(A.n, A.kind)
    out = A
    for _ in range(k - 1):
        out = mat_mul(out, A)
    return out


def _entrywise(A: Matrix, B: Matrix, op) -> Matrix:
    _check_pair(A, B)
    d, a, b = _common(A, B)
    out = tuple(tuple(op(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
    return Matrix.from_num(out, d, A.kind)


def _had(x, y):
    if x is ZERO or y is ZERO:
        return ZERO
    if x is TOP or y is TOP:
        return TOP
    return x + y


def hadamard(A: Matrix, B: Matrix) -> Matrix:
    """Entrywise semiring product."""
    return _entrywise(A, B, _had)


def join(A: Matrix, B: Matrix) -> Matrix:
    return _entrywise(A, B, lambda x, y: x if x >= y else y)


def meet(A: Matrix, B: Matrix) -> Matrix:
    return _entrywise(A, B, lambda x, y: x if x <= y else y)


def leq(A: Matrix, B: Matrix) -> bool:
    """Entrywise order A <= B."""
    _check_pair(A, B)
    _, a, b = _common(A, B)
    return all(x <= y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def scale(A: Matrix, lam) -> Matrix:
    """lambda * A for a scalar lambda."""
    lam = coerce(lam, A.kind)
    if lam is ZERO:
        return zeros(A.n, A.kind)
    d = math.lcm(A.den, lam.denominator)
    a = _scale(A.num, d // A.den)
    shift = int(lam * d)
    out = tuple(tuple(v + shift if (v is not ZERO and v is not TOP) else v for v in r) for r in a)
    return Matrix.from_num(out, d, A.kind)


# -- unary maps -------------------------------------------------------------

def transpose(A: Matrix) -> Matrix:
    return Matrix.from_num(tuple(zip(*A.num)), A.den, A.kind)


def delta(A: Matrix) -> Matrix:
    """Reflection in the anti-diagonal: (i, j) -> (n-1-j, n-1-i)."""
    if not A.is_upper:
        raise ShapeError("delta is defined on upper triangular matrices")
    n = A.n
    num = tuple(tuple(A.num[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n))
    return Matrix.from_num(num, A.den, A.kind)


def diag_part(A: Matrix) -> Matrix:
    n = A.n
    num = tuple(tuple(A.num[i][i] if i == j else ZERO for j in range(n)) for i in range(n))
    return Matrix.from_num(num, A.den, A.kind)


def diag_inverse(D: Matrix) -> Matrix:
    n = D.n
    num = []
    for i in range(n):
        v = D.num[i][i]
        if v is ZERO or v is TOP:
            raise ShapeError("diagonal entry has no inverse")
        num.append(tuple(-v if i == j else ZERO for j in range(n)))
    return Matrix.from_num(tuple(num), D.den, D.kind)


def top_to_one(A: Matrix) -> Matrix:
    num = tuple(tuple(0 if v is TOP else v for v in r) for r in A.num)
    return Matrix.from_num(num, A.den, A.kind)


def dom_im(A: Matrix) -> tuple[frozenset, frozenset]:
    """Indices of the non-zero rows and of the non-zero columns."""
    n = A.n
    dom = frozenset(i for i in range(n) if any(v is not ZERO for v in A.num[i]))
    im = frozenset(j for j in range(n) if any(A.num[i][j] is not ZERO for i in range(n)))
    return dom, im


def embed_corner(A: Matrix, n: int) -> Matrix:
    """Place A in the top-left corner of an n x n zero matrix."""
    m = A.n
    num = tuple(
        tuple(A.num[i][j] if (i < m and j < m) else ZERO for j in range(n)) for i in range(n)
    )
    return Matrix.from_num(num, A.den, A.kind)


# -- Boolean helpers --------------------------------------------------------

def to_bits(A: Matrix) -> int:
    """Bit (i*n + j) is set iff A[i, j] is non-zero."""
    bits = 0
    for i, r in enumerate(A.num):
        for j, v in enumerate(r):
            if v is not ZERO:
                bits |= 1 << (i * A.n + j)
    return bits


def from_bits(bits: int, n: int, kind: Kind = Kind.BOOLEAN) -> Matrix:
    num = tuple(
        tuple(0 if bits >> (i * n + j) & 1 else ZERO for j in range(n)) for i in range(n)
    )
    return Matrix.from_num(num, 1, kind)


def bool_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    """Build a Boolean matrix from 0/1 integers."""
    return Matrix([[ONE if x else ZERO for x in r] for r in rows], Kind.BOOLEAN)


def _require_bool(A: Matrix):
    if A.kind is not Kind.BOOLEAN:
        raise KindMismatch("Boolean matrix required")


def join_closure(vectors: Iterable[tuple]) -> frozenset:
    """All joins of the given 0/1 vectors, including the zero vector."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return frozenset()
    n = len(vectors[0])
    space = {(0,) * n}
    for v in vectors:
        space |= {tuple(a | b for a, b in zip(v, w)) for w in space}
    return frozenset(space)


def bool_col_space(A: Matrix) -> frozenset:
    _require_bool(A)
    cols = [tuple(0 if A.num[i][j] is ZERO else 1 for i in range(A.n)) for j in range(A.n)]
    return join_closure(cols)


def bool_row_space(A: Matrix) -> frozenset:
    return bool_col_space(transpose(A))


def bool_unique_basis(vectors: Iterable[tuple]) -> list[tuple]:
    """Members of the generated space that are not joins of members strictly below."""
    space = join_closure(vectors)
    basis = []
    for x in sorted(space):
        if not any(x):
            continue
        below = [y for y in space if y != x and all(a <= b for a, b in zip(y, x))]
        joined = tuple(max(col) for col in zip(*below)) if below else (0,) * len(x)
        if joined != x:
            basis.append(x)
    return basis


def all_subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from combinations(items, k)
