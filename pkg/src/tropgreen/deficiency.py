"""Path deficiencies, tightness patterns and tilde-H classes of upper triangular idempotents.

Values are written additively (max-plus): the deficiency of a path is the
direct entry minus the sum of the entries along the path, and a path is tight
in an idempotent when its deficiency is ONE (that is, 0).

Indices in ``Path`` and ``TightnessPattern`` are 1-based, to match the usual
way of writing paths such as 1 -> 2 -> 4.  Matrix access stays 0-based.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from . import generators as gen
from .certificates import Proof
from .matrix import (
    Matrix,
    Shape,
    ShapeError,
    delta,
    diag_inverse,
    diagonal,
    mat_mul,
    meet,
    product,
)
from .plusstar import alpha_of, plus_of, right_normalize, star_of
from .semiring import ONE, ZERO, Kind


class InconsistencyError(AssertionError):
    """Two independent evaluations of the same predicate disagree."""


class UnrealizablePattern(ValueError):
    pass


# -- paths and deficiencies ---------------------------------------------------

@dataclass(frozen=True)
class Path:
    vertices: tuple

    def __post_init__(self):
        v = tuple(int(x) for x in self.vertices)
        object.__setattr__(self, "vertices", v)
        if len(v) < 2:
            raise ValueError("a path needs at least two vertices")
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError("path vertices must be nondecreasing")
        if v[0] < 1:
            raise ValueError("vertices are 1-based")

    @classmethod
    def of(cls, *vertices) -> "Path":
        return cls(tuple(vertices))

    @classmethod
    def parse(cls, text: str) -> "Path":
        """Accepts '1->2->4', '1,2,4' or '1 2 4'."""
        parts = text.replace("->", " ").replace(",", " ").split()
        return cls(tuple(int(p) for p in parts))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def simple(self) -> bool:
        v = self.vertices
        return all(a < b for a, b in zip(v, v[1:]))

    def __str__(self):
        return "->".join(str(v) for v in self.vertices)


def _finite(A: Matrix, i: int, j: int) -> Fraction:
    v = A[i - 1, j - 1]
    if v is ZERO:
        raise ShapeError(f"zero entry at ({i},{j}) on the path")
    return v


def deficiency(A: Matrix, path: Path) -> Fraction:
    """A_{i1,ik} minus the sum of the entries along the path."""
    v = path.vertices
    if v[-1] > A.n:
        raise ValueError("path leaves the index range")
    total = sum(_finite(A, a, b) for a, b in zip(v, v[1:]))
    return _finite(A, v[0], v[-1]) - total


def anchored_reduction(A: Matrix, path: Path) -> Fraction:
    """The deficiency of a path rebuilt from deficiencies of paths 1 -> a -> b.

    Def(i1 ... ik) = sum_t Def(1 -> i_{t-1} -> i_t) - Def(1 -> i1 -> ik).
    """
    v = path.vertices
    total = sum(deficiency(A, Path.of(1, a, b)) for a, b in zip(v, v[1:]))
    return total - deficiency(A, Path.of(1, v[0], v[-1]))


class DefMode(enum.Enum):
    ALL_PATHS = "AllPaths"
    LENGTH2 = "Length2"
    ONE_ANCHORED = "OneAnchored"


def paths(n: int, mode: DefMode):
    """The paths compared in each mode.

    ALL_PATHS takes every nondecreasing path of length 2 to n.
    """
    if mode is DefMode.ONE_ANCHORED:
        for a, b in combinations_with_replacement(range(1, n + 1), 2):
            yield Path.of(1, a, b)
    elif mode is DefMode.LENGTH2:
        for t in combinations_with_replacement(range(1, n + 1), 3):
            yield Path(t)
    else:
        for k in range(3, n + 2):
            for t in combinations_with_replacement(range(1, n + 1), k):
                yield Path(t)


def first_difference(M: Matrix, N: Matrix, mode: DefMode = DefMode.LENGTH2):
    """The first path on which the deficiencies differ, or None."""
    M.require(Shape.POSITIVE_UPPER)
    N.require(Shape.POSITIVE_UPPER)
    if M.n != N.n:
        raise ValueError("dimension mismatch")
    for p in paths(M.n, mode):
        if deficiency(M, p) != deficiency(N, p):
            return p
    return None


def deficiency_equal(M: Matrix, N: Matrix, mode: DefMode = DefMode.LENGTH2) -> bool:
    return first_difference(M, N, mode) is None


@dataclass(frozen=True)
class DResult:
    related: bool
    conjugator: Matrix | None
    separating_path: Path | None = None

    def __iter__(self):
        return iter((self.related, self.conjugator))


def d_related_unitriangular(A: Matrix, B: Matrix) -> DResult:
    """Decide D in UT_n for unitriangular positive A, B by length-2 deficiencies.

    When related the conjugator G = diag(A_{1,i} - B_{1,i}) is returned and
    G A G^-1 = B is checked.
    """
    for M in (A, B):
        M.require(Shape.UNITRIANGULAR, Shape.POSITIVE_UPPER)
    bad = first_difference(A, B, DefMode.LENGTH2)
    if bad is not None:
        return DResult(False, None, bad)
    G = diagonal([A[0, i] - B[0, i] for i in range(A.n)], A.kind)
    if product([G, A, diag_inverse(G)]) != B:
        raise InconsistencyError("deficiencies agree but G A G^-1 != B")
    return DResult(True, G)


def conjugate(A: Matrix, g) -> Matrix:
    """G A G^-1 for the diagonal G with entries g."""
    G = diagonal(list(g), A.kind)
    return product([G, A, diag_inverse(G)])


# -- tightness ------------------------------------------------------------------

def _closure_step(tight: set, n: int) -> set:
    out = set(tight)
    for i, u, v, j in combinations(range(1, n + 1), 4):
        iuv, iuj, ivj, uvj = (i, u, v), (i, u, j), (i, v, j), (u, v, j)
        if iuj in out and uvj in out:
            out |= {ivj, iuv}
        if ivj in out and iuv in out:
            out |= {iuj, uvj}
        if len({iuv, iuj, ivj, uvj} & out) >= 3:
            out |= {iuv, iuj, ivj, uvj}
    return out


def tightness_closure(tight, n: int) -> frozenset:
    cur = set(tight)
    while True:
        nxt = _closure_step(cur, n)
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def simple_triples(n: int) -> list:
    return list(combinations(range(1, n + 1), 3))


@dataclass(frozen=True)
class TightnessPattern:
    """The set of simple length-2 paths (i, k, j) in which an idempotent is tight."""

    n: int
    tight: frozenset

    def __post_init__(self):
        t = frozenset(tuple(p) for p in self.tight)
        object.__setattr__(self, "tight", t)
        allowed = set(simple_triples(self.n))
        if not t <= allowed:
            raise ValueError(f"not simple length-2 paths in [{self.n}]: {sorted(t - allowed)}")
        closed = tightness_closure(t, self.n)
        if closed != t:
            raise UnrealizablePattern(
                f"pattern forces tightness in {sorted(closed - t)} as well")

    @classmethod
    def parse(cls, n: int, text: str) -> "TightnessPattern":
        """'123,124' style, or 'none' / 'all'."""
        text = text.strip().lower()
        if text in ("", "none"):
            return cls(n, frozenset())
        if text == "all":
            return cls(n, frozenset(simple_triples(n)))
        items = [s for s in text.replace(" ", ",").split(",") if s]
        return cls(n, frozenset(tuple(int(c) for c in s) for s in items))

    @property
    def loose(self) -> frozenset:
        return frozenset(simple_triples(self.n)) - self.tight

    @property
    def all_tight(self) -> bool:
        return not self.loose

    @property
    def all_loose(self) -> bool:
        return not self.tight

    def dual(self) -> "TightnessPattern":
        m = self.n + 1
        return TightnessPattern(self.n, frozenset((m - j, m - k, m - i) for i, k, j in self.tight))

    def label(self) -> str:
        if not self.tight:
            return "none"
        return ",".join("".join(map(str, p)) for p in sorted(self.tight))

    def __str__(self):
        return self.label()


def realizable_patterns(n: int) -> list:
    """All closed patterns over the simple length-2 paths of [n]."""
    triples = simple_triples(n)
    out = []
    for r in range(len(triples) + 1):
        for s in combinations(triples, r):
            if tightness_closure(s, n) == frozenset(s):
                out.append(TightnessPattern(n, frozenset(s)))
    return out


def _require_idempotent_positive(E: Matrix):
    E.require(Shape.POSITIVE_UPPER)
    if mat_mul(E, E) != E:
        raise ValueError("E is not idempotent")


def tightness_pattern(E: Matrix) -> TightnessPattern:
    _require_idempotent_positive(E)
    tight = set()
    for t in simple_triples(E.n):
        d = deficiency(E, Path(t))
        if d < ONE:
            raise AssertionError(f"idempotent with negative deficiency on {t}")
        if d == ONE:
            tight.add(t)
    return TightnessPattern(E.n, frozenset(tight))


# -- idempotent generators -------------------------------------------------------

def _from_upper(n: int, entries: dict, kind: Kind = Kind.MAXPLUS) -> Matrix:
    rows = [[entries.get((i, j), ZERO) if j >= i else ZERO for j in range(n)] for i in range(n)]
    for i in range(n):
        rows[i][i] = ONE
    return Matrix(rows, kind)


def tight_all_idempotent(superdiag) -> Matrix:
    """E_{i,j} = sum of the superdiagonal entries from i to j."""
    s = list(superdiag)
    n = len(s) + 1
    e = {}
    for i in range(n):
        acc = ONE
        for j in range(i + 1, n):
            acc += s[j - 1]
            e[(i, j)] = acc
    return _from_upper(n, e)


def loose_all_idempotent(superdiag, c=1) -> Matrix:
    """Tight-all plus c (j - i - 1)^2 above the superdiagonal; loose in every simple path when c > 0.

    For i < k < j with a = k - i, b = j - k the extra deficiency is c (2ab - 1).
    """
    T = tight_all_idempotent(superdiag)
    n = T.n
    c = Fraction(c)
    e = {(i, j): T[i, j] + c * (j - i - 1) ** 2 for i in range(n) for j in range(i + 1, n)}
    return _from_upper(n, e)


def _slack(rng, cfg) -> Fraction:
    v = gen.nonneg(rng, cfg)
    return v if v > 0 else Fraction(1)


def pattern_idempotent(pattern: TightnessPattern, rng: random.Random,
                       cfg: gen.SamplerConfig = gen.DEFAULT, tries: int = 1000) -> Matrix:
    """A random idempotent with exactly the given tightness pattern (n = 3 or 4, or all/none).

    Start from the tight-all idempotent on random superdiagonal entries and
    raise entries above it by random slacks; the result is re-checked for
    idempotency and for the pattern it achieves.
    """
    n = pattern.n
    for _ in range(tries):
        s = [gen.rational(rng, cfg) for _ in range(n - 1)]
        if pattern.all_tight:
            E = tight_all_idempotent(s)
        elif pattern.all_loose and n != 4:
            E = loose_all_idempotent(s, _slack(rng, cfg))
        elif n == 3:
            raise AssertionError("unreachable: n = 3 patterns are all or none")
        elif n == 4:
            E = _pattern4(pattern.tight, s, rng, cfg)
            if E is None:
                continue
        else:
            raise UnrealizablePattern(f"no generator for pattern {pattern} at n = {n}")
        if mat_mul(E, E) == E and tightness_pattern(E) == pattern:
            return E
    raise AssertionError(f"could not generate an idempotent with pattern {pattern}")


def _pattern4(tight, s, rng, cfg):
    e12, e23, e34 = s
    s123 = ONE if (1, 2, 3) in tight else _slack(rng, cfg)
    s234 = ONE if (2, 3, 4) in tight else _slack(rng, cfg)
    if (1, 2, 4) in tight and (1, 3, 4) in tight:
        if ((1, 2, 3) in tight) != ((2, 3, 4) in tight):
            return None
        s234 = s123
    e13 = e12 + e23 + s123
    e24 = e23 + e34 + s234
    via2, via3 = e12 + e24, e13 + e34
    if (1, 2, 4) in tight:
        e14 = via2
    elif (1, 3, 4) in tight:
        e14 = via3
    else:
        e14 = max(via2, via3) + _slack(rng, cfg)
    if e14 < max(via2, via3):
        return None
    e = {(0, 1): e12, (1, 2): e23, (2, 3): e34, (0, 2): e13, (1, 3): e24, (0, 3): e14}
    return _from_upper(4, e)


# -- tilde-H classes -----------------------------------------------------------

def o_member(G) -> bool:
    """Membership of an upper triangular m x m array in O_m([0, 1]) (additive)."""
    m = len(G)
    for i in range(m):
        for j in range(i, m):
            v = G[i][j]
            if v > ONE:
                return False
            if j + 1 < m and v > G[i][j + 1]:
                return False
            if i > 0 and v > G[i - 1][j]:
                return False
    return True


def o_sample(rng: random.Random, m: int, cfg: gen.SamplerConfig = gen.DEFAULT) -> list:
    """A random element of O_m([0, 1]); boundary values are hit with positive probability."""
    G = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m - 1, i - 1, -1):
            bound = ONE
            if j + 1 < m:
                bound = min(bound, G[i][j + 1])
            if i > 0:
                bound = min(bound, G[i - 1][j])
            G[i][j] = bound if rng.random() < 0.3 else bound - _slack(rng, cfg)
    return G


def o_bar(G, n: int) -> list:
    """Pad G with a first row and last column of ONE entries (upper part only)."""
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            out[i][j] = ONE if (i == 0 or j == n - 1) else G[i - 1][j - 1]
    return out


class Case(enum.Enum):
    GROUP = "group"          # lambda E
    MU22 = "mu22"            # lambda ([mu]_{2,2} o E), mu <= 1
    MU33 = "mu33"            # lambda ([mu]_{3,3} o E), mu <= 1
    MU_BLOCK = "mu-block"    # lambda ([mu]_{2,2} o [mu]_{2,3} o [mu]_{3,3} o E), mu <= 1
    ORDER = "order"          # lambda (G-bar o E), G in O_{n-2}([0, 1])


# Tightness pattern at n = 4 -> (case number, dual?, form)
_N4_TABLE = {
    frozenset(): (1, False, Case.GROUP),
    frozenset({(1, 2, 3)}): (2, False, Case.GROUP),
    frozenset({(2, 3, 4)}): (2, True, Case.GROUP),
    frozenset({(1, 2, 4)}): (3, False, Case.GROUP),
    frozenset({(1, 3, 4)}): (3, True, Case.GROUP),
    frozenset({(1, 3, 4), (2, 3, 4)}): (4, False, Case.MU33),
    frozenset({(1, 2, 3), (1, 2, 4)}): (4, True, Case.MU22),
    frozenset({(1, 2, 3), (2, 3, 4)}): (5, False, Case.GROUP),
    frozenset({(1, 2, 4), (1, 3, 4)}): (6, False, Case.MU_BLOCK),
    frozenset(simple_triples(4)): (7, False, Case.ORDER),
}

_CONSTRAINTS = {
    Case.GROUP: "none (maximal subgroup)",
    Case.MU22: "mu <= 1",
    Case.MU33: "mu <= 1",
    Case.MU_BLOCK: "mu <= 1",
    Case.ORDER: "G in O_{n-2}([0,1]); at n = 4: alpha v gamma <= beta <= 1",
}


@dataclass(frozen=True)
class HtClassDescriptor:
    """The shape of the tilde-H class of an idempotent E.

    Members are lambda (R o E) with R = ONE outside the free positions listed
    by ``form``; the constraint on the free entries is in ``constraint``.
    """

    E: Matrix = field(repr=False)
    case_id: str
    pattern: TightnessPattern
    form: Case
    dual: bool = False

    @property
    def n(self) -> int:
        return self.E.n

    @property
    def constraint(self) -> str:
        return _CONSTRAINTS[self.form]

    # parametric route: ratio of A to lambda E, checked against the form
    def ratio(self, A: Matrix):
        """(lambda, R) with A_{i,j} = lambda + R_{i,j} + E_{i,j}, or None if A is off-shape."""
        n = self.n
        if A.n != n or A.kind is not self.E.kind or Shape.POSITIVE_UPPER not in A.shapes:
            return None
        lam = A[0, 0]
        R = [[A[i, j] - lam - self.E[i, j] if j >= i else ZERO for j in range(n)]
             for i in range(n)]
        return lam, R

    def contains(self, A: Matrix) -> bool:
        got = self.ratio(A)
        if got is None:
            return False
        _, R = got
        n = self.n
        free = self._free_positions()
        for i in range(n):
            for j in range(i, n):
                if (i, j) not in free and R[i][j] != ONE:
                    return False
        if self.form is Case.GROUP:
            return True
        if self.form in (Case.MU22, Case.MU33, Case.MU_BLOCK):
            vals = {R[i][j] for (i, j) in free}
            return len(vals) == 1 and vals.pop() <= ONE
        G = [[R[i + 1][j + 1] if j >= i else ZERO for j in range(n - 2)] for i in range(n - 2)]
        return o_member(G)

    def _free_positions(self) -> frozenset:
        n = self.n
        if self.form is Case.GROUP:
            return frozenset()
        if self.form is Case.MU22:
            return frozenset({(1, 1)})
        if self.form is Case.MU33:
            return frozenset({(2, 2)})
        if self.form is Case.MU_BLOCK:
            return frozenset({(1, 1), (1, 2), (2, 2)})
        return frozenset((i, j) for i in range(1, n - 1) for j in range(i, n - 1))

    def build(self, lam, R) -> Matrix:
        n = self.n
        rows = [[lam + R[i][j] + self.E[i, j] if j >= i else ZERO for j in range(n)]
                for i in range(n)]
        return Matrix(rows, self.E.kind)

    def sample_ratio(self, rng: random.Random, cfg: gen.SamplerConfig = gen.DEFAULT):
        n = self.n
        R = [[ONE if j >= i else ZERO for j in range(n)] for i in range(n)]
        if self.form is Case.ORDER:
            G = o_sample(rng, n - 2, cfg)
            R = o_bar(G, n)
        elif self.form is not Case.GROUP:
            mu = ONE if rng.random() < 0.2 else -_slack(rng, cfg)
            for i, j in self._free_positions():
                R[i][j] = mu
        return R

    def sample_member(self, rng: random.Random, cfg: gen.SamplerConfig = gen.DEFAULT) -> Matrix:
        A = self.build(gen.rational(rng, cfg), self.sample_ratio(rng, cfg))
        if not self.contains(A):
            raise AssertionError("sampled member fails the parametric predicate")
        return A

    def sample_nonmember(self, rng: random.Random, cfg: gen.SamplerConfig = gen.DEFAULT,
                         tries: int = 100) -> Matrix:
        """A member with one entry moved so that the parametric predicate fails.

        Half of the moves push a free parameter just past its bound, the rest
        shift a single entry off the form.
        """
        n = self.n
        free = sorted(self._free_positions())
        for _ in range(tries):
            lam = gen.rational(rng, cfg)
            R = self.sample_ratio(rng, cfg)
            if free and rng.random() < 0.5:
                i, j = rng.choice(free)
                R[i][j] = R[i][j] + _slack(rng, cfg)
            else:
                i = rng.randrange(n)
                j = rng.randrange(i, n)
                if (i, j) == (0, 0):
                    continue
                d = _slack(rng, cfg)
                R[i][j] = R[i][j] + (d if rng.random() < 0.5 else -d)
            A = self.build(lam, R)
            if not self.contains(A):
                return A
        raise AssertionError("could not perturb out of the class")


def ht_class_descriptor(E: Matrix) -> HtClassDescriptor:
    """Select the tilde-H class form of E from its tightness pattern.

    Covered: n = 3 (both patterns), n = 4 (all ten patterns) and, for any n,
    idempotents that are tight in every path or loose in every simple path.
    """
    pat = tightness_pattern(E)
    n = E.n
    if n <= 2 or pat.all_loose:
        cid = {3: "n3-loose", 4: "n4-case1"}.get(n, "loose-all")
        return HtClassDescriptor(E, cid, pat, Case.GROUP)
    if n == 4:
        number, dual, form = _N4_TABLE[pat.tight]
        cid = f"n4-case{number}" + ("-dual" if dual else "")
        return HtClassDescriptor(E, cid, pat, form, dual)
    if pat.all_tight:
        return HtClassDescriptor(E, "n3-tight" if n == 3 else "tight-all", pat,
                                 Case.MU22 if n == 3 else Case.ORDER)
    raise UnrealizablePattern(f"no tilde-H description for pattern {pat} at n = {n}")


def definitional_member(E: Matrix, A: Matrix) -> bool:
    """A ~H E via A^(+) = E = A^(*)."""
    if A.n != E.n or Shape.FULL_DIAGONAL not in A.shapes:
        return False
    return plus_of(A) == E and star_of(A) == E


def ht_membership(E: Matrix, A: Matrix, descriptor: HtClassDescriptor | None = None) -> bool:
    """Both routes; a disagreement raises InconsistencyError."""
    d = descriptor or ht_class_descriptor(E)
    para = d.contains(A)
    defn = definitional_member(E, A)
    if para != defn:
        raise InconsistencyError(
            f"{d.case_id}: parametric says {para}, plus/star says {defn} for {A!r}")
    return para


def _kappa(G, H, n):
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            out[i][j] = max(G[i][k] + H[k][j] for k in range(i, j + 1))
    return out


@dataclass
class ClosureReport:
    case_id: str
    samples: int
    closed: bool
    product_law: bool | None
    witness: dict | None = None

    def to_json(self):
        from .certificates import to_jsonable
        return {"case_id": self.case_id, "samples": self.samples, "closed": self.closed,
                "product_law": self.product_law, "witness": to_jsonable(self.witness)}


def ht_closure_check(E: Matrix, samples: int = 200, seed: int = 0,
                     cfg: gen.SamplerConfig = gen.DEFAULT) -> ClosureReport:
    """Sample pairs in the tilde-H class of E and test whether their product stays inside.

    For tight-all E the product is also compared with lambda lambda' (G-bar H-bar o E).
    """
    rng = random.Random(seed)
    d = ht_class_descriptor(E)
    law = True if d.form is Case.ORDER else None
    for _ in range(samples):
        lam1, R1 = gen.rational(rng, cfg), d.sample_ratio(rng, cfg)
        lam2, R2 = gen.rational(rng, cfg), d.sample_ratio(rng, cfg)
        A, B = d.build(lam1, R1), d.build(lam2, R2)
        AB = mat_mul(A, B)
        if not ht_membership(E, AB, d):
            return ClosureReport(d.case_id, samples, False, law,
                                 {"A": A, "B": B, "AB": AB, "AB_plus": plus_of(AB)})
        if law is not None and AB != d.build(lam1 + lam2, _kappa(R1, R2, E.n)):
            law = False
    return ClosureReport(d.case_id, samples, True, law)


# -- the theta embedding -------------------------------------------------------------

def theta_embed(A: Matrix) -> Matrix:
    """Append a copy of the last column and a last row (0 ... 0 1)."""
    n = A.n
    if not A.is_upper:
        raise ShapeError("theta needs an upper triangular matrix")
    if A[0, 0] != ONE or A[n - 1, n - 1] != ONE:
        raise ShapeError("theta needs ONE at (1,1) and (n,n)")
    rows = [list(r) + [r[n - 1]] for r in A.rows]
    rows.append([ZERO] * n + [ONE])
    return Matrix(rows, A.kind)


def theta_to(A: Matrix, m: int) -> Matrix:
    """Apply theta until the dimension is m."""
    if m < A.n:
        raise ValueError("cannot embed into a smaller dimension")
    while A.n < m:
        A = theta_embed(A)
    return A


def theta_preservation(A: Matrix, B: Matrix) -> dict:
    tA, tB = theta_embed(A), theta_embed(B)
    return {
        "hom": theta_embed(mat_mul(A, B)) == mat_mul(tA, tB),
        "plus": plus_of(tA) == theta_embed(plus_of(A)),
        "star": star_of(tA) == theta_embed(star_of(A)),
    }


# -- counterexample replays --------------------------------------------------------

def _additive(rows, g, kind=Kind.MAXPLUS) -> Matrix:
    """Rows given as multiples of g (None for ZERO)."""
    g = Fraction(g)
    return Matrix([[ZERO if v is None else v * g for v in r] for r in rows], kind)


_X = None
NONCOMMUTE_A = ((0, 1, 0, 2), (_X, 0, 1, 1), (_X, _X, 0, 0), (_X, _X, _X, 0))
NONCOMMUTE_PLUS = ((0, -1, 0, 2), (_X, 0, 1, 1), (_X, _X, 0, 0), (_X, _X, _X, 0))
NONCOMMUTE_STAR = ((0, 1, 0, 2), (_X, 0, -1, 1), (_X, _X, 0, 0), (_X, _X, _X, 0))


def _require_positive_g(g):
    if Fraction(g) <= 0:
        raise ValueError("g must be strictly above ONE")


def rtilde_noncommute_witness(n: int = 4, g=1) -> Proof:
    """A^(+) and A^(*) are not D-related for the 4 x 4 witness A (theta-embedded when n > 4)."""
    if n < 4:
        raise ValueError("the witness needs n >= 4")
    _require_positive_g(g)
    A4 = _additive(NONCOMMUTE_A, g)
    A = theta_to(A4, n)
    P, S = plus_of(A), star_of(A)
    proof = Proof("A^(+) and A^(*) are not D-related", {"n": n, "g": g, "A": A})
    proof.check("A^(+) of the 4x4 witness", plus_of(A4) == _additive(NONCOMMUTE_PLUS, g),
                plus_of(A4))
    proof.check("A^(*) of the 4x4 witness", star_of(A4) == _additive(NONCOMMUTE_STAR, g),
                star_of(A4))
    if n > 4:
        proof.check("theta commutes with (+)", P == theta_to(plus_of(A4), n), P)
        proof.check("theta commutes with (*)", S == theta_to(star_of(A4), n), S)
    path = Path.of(1, 2, 4)
    dp, ds = deficiency(P, path), deficiency(S, path)
    proof.check("Def_{A(+)}(1->2->4) = 2g", dp == 2 * Fraction(g), dp)
    proof.check("Def_{A(*)}(1->2->4) = 1", ds == ONE, ds)
    res = d_related_unitriangular(P, S)
    proof.check("not D-related", not res.related,
                {"separating_path": str(res.separating_path)})
    return proof


HT_NONCLOSURE_E = ((0, 0, 2, 2, 2), (_X, 0, 1, 2, 2), (_X, _X, 0, 0, 0),
             (_X, _X, _X, 0, 0), (_X, _X, _X, _X, 0))
HT_NONCLOSURE_A = ((0, 0, 2, 2, 2), (_X, -2, -1, 1, 2), (_X, _X, -3, 0, 0),
             (_X, _X, _X, -3, 0), (_X, _X, _X, _X, 0))
HT_NONCLOSURE_A2 = ((0, 0, 2, 2, 2), (_X, -4, -3, -1, 2), (_X, _X, -6, -3, 0),
              (_X, _X, _X, -6, 0), (_X, _X, _X, _X, 0))
HT_NONCLOSURE_A2_PLUS = ((0, 0, 2, 2, 2), (_X, 0, 2, 2, 2), (_X, _X, 0, 0, 0),
                   (_X, _X, _X, 0, 0), (_X, _X, _X, _X, 0))


def ht_nonclosure_witness(n: int = 5, g=1) -> Proof:
    """An A in the tilde-H class of E whose square leaves it (n >= 5 via theta)."""
    if n < 5:
        raise ValueError("the witness needs n >= 5")
    _require_positive_g(g)
    E5, A5 = _additive(HT_NONCLOSURE_E, g), _additive(HT_NONCLOSURE_A, g)
    proof = Proof("tilde-H class of E is not closed under products", {"n": n, "g": g})
    A2 = mat_mul(A5, A5)
    proof.check("A^(+) = E", plus_of(A5) == E5, plus_of(A5))
    proof.check("A^(*) = E", star_of(A5) == E5, star_of(A5))
    proof.check("A^2 as displayed", A2 == _additive(HT_NONCLOSURE_A2, g), A2)
    proof.check("(A^2)^(+) as displayed", plus_of(A2) == _additive(HT_NONCLOSURE_A2_PLUS, g),
                plus_of(A2))
    proof.check("(A^2)^(+) != E", plus_of(A2) != E5)
    if n > 5:
        E, A = theta_to(E5, n), theta_to(A5, n)
        proof.inputs.update(E=E, A=A)
        proof.check("theta(A) in tilde-H of theta(E)", definitional_member(E, A))
        sq = mat_mul(A, A)
        proof.check("theta(A)^2 not in tilde-H of theta(E)", not definitional_member(E, sq),
                    plus_of(sq))
    else:
        proof.inputs.update(E=E5, A=A5)
    return proof


# -- left compatibility of tilde-R ------------------------------------------------

def r_related(A: Matrix, B: Matrix) -> bool:
    """R in the full-diagonal upper triangular monoid: equal right normal forms."""
    return right_normalize(A) == right_normalize(B)


def _row_c(E: Matrix, alpha: Matrix, gamma: Matrix, i: int, ell: int) -> Matrix:
    """E with row i replaced by the separating row (gamma_{i,ell} > alpha_{i,ell})."""
    n = E.n
    g = gamma[i, ell]
    rows = [list(r) for r in E.rows]
    for j in range(i, n):
        if j < ell:
            rows[i][j] = E[i, j] - g
        elif j == ell:
            rows[i][j] = E[i, j] - g + alpha[i, ell]
        else:
            rows[i][j] = E[i, j] + sum(gamma[i, s] for s in range(ell, j + 1))
    return Matrix(rows, E.kind)


def leftcong_candidates(A: Matrix, B: Matrix):
    """The multipliers tried, in order: A^(+) meet B^(+), then one per differing row."""
    yield "meet", meet(plus_of(A), plus_of(B))
    E = plus_of(A)
    if plus_of(B) != E:
        return
    a, c = alpha_of(A, E), alpha_of(B, E)
    n = A.n
    for i in range(n):
        diff = [j for j in range(i, n) if a[i, j] != c[i, j]]
        if not diff:
            continue
        ell = max(diff)
        if c[i, ell] > a[i, ell]:
            yield f"row{i + 1}", _row_c(E, a, c, i, ell)
        else:
            yield f"row{i + 1}", _row_c(E, c, a, i, ell)


@dataclass
class LeftCongReport:
    r_related: bool
    status: str          # "equal", "separated", "inconclusive" or "violation"
    trials: int
    multiplier: Matrix | None = None
    construction: str | None = None

    @property
    def consistent(self) -> bool:
        return self.status in ("equal", "separated")


def leftcong_check(A: Matrix, B: Matrix, trials: int = 100, seed: int = 0,
                   cfg: gen.SamplerConfig = gen.DEFAULT) -> LeftCongReport:
    """(CA)^(+) = (CB)^(+) for every C exactly when A R B; test or find a separating C."""
    for M in (A, B):
        M.require(Shape.POSITIVE_UPPER)
    rng = random.Random(seed)
    n = A.n
    if r_related(A, B):
        for _ in range(trials):
            C = gen.positive_upper(rng, n, cfg)
            if plus_of(mat_mul(C, A)) != plus_of(mat_mul(C, B)):
                return LeftCongReport(True, "violation", trials, C, "random")
        return LeftCongReport(True, "equal", trials)
    for name, C in leftcong_candidates(A, B):
        if plus_of(mat_mul(C, A)) != plus_of(mat_mul(C, B)):
            return LeftCongReport(False, "separated", trials, C, name)
    for _ in range(trials):
        C = gen.positive_upper(rng, n, cfg)
        if plus_of(mat_mul(C, A)) != plus_of(mat_mul(C, B)):
            return LeftCongReport(False, "separated", trials, C, "random")
    return LeftCongReport(False, "inconclusive", trials)


def same_plus_pair(rng: random.Random, n: int, cfg: gen.SamplerConfig = gen.DEFAULT,
                   tries: int = 1000):
    """A, B positive upper with A^(+) = B^(+) but not R-related."""
    for _ in range(tries):
        A = gen.positive_upper(rng, n, cfg)
        E = plus_of(A)
        alpha = alpha_of(A, E)
        inner = [(i, j) for i in range(n) for j in range(i + 1, n - 1)]
        if not inner:
            raise ValueError("needs n >= 3")
        i, j = rng.choice(inner)
        step = _slack(rng, cfg)
        if alpha[i, j] > ONE and rng.random() < 0.5:
            step = -min(step, alpha[i, j])
        d = [gen.rational(rng, cfg) for _ in range(n)]
        rows = [[E[r, c] + alpha[r, c] + (step if (r, c) == (i, j) else ONE) + d[c]
                 if c >= r else ZERO for c in range(n)] for r in range(n)]
        B = Matrix(rows, A.kind)
        if plus_of(B) == E and not r_related(A, B):
            return A, B
    raise AssertionError("could not build a same-plus pair")


def delta_pattern_check(E: Matrix) -> bool:
    """Delta reverses tightness patterns: pattern(Delta E) = dual(pattern(E))."""
    return tightness_pattern(delta(E)) == tightness_pattern(E).dual()
