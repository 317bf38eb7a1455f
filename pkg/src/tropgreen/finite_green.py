"""Green's relations and their generalisations on finite Boolean matrix monoids.

Elements are bit-packed integers: bit ``i*n + j`` holds entry (i, j).  A family
is enumerated in increasing bit order, a full multiplication table is built
when the family is small enough, and every relation is computed as a
partition from a per-element signature.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .certificates import Proof
from .matrix import Matrix, embed_corner, from_bits, identity, mat_mul, to_bits
from .plusstar import residual_right
from .semiring import ONE, ZERO, Kind

HARD_CAP = 1 << 20
TABLE_CAP = 4096


class TooLarge(ValueError):
    """The requested family or computation exceeds the size limits."""


class Family(enum.Enum):
    FULL = "FullBool"
    UPPER = "UpperBool"
    UNI = "UniBool"
    WELL_BEHAVED = "WellBehaved"
    HALL = "Hall"
    REFLEXIVE = "Reflexive"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower()
        aliases = {
            "fullbool": cls.FULL, "full": cls.FULL, "m": cls.FULL,
            "upperbool": cls.UPPER, "upper": cls.UPPER, "ut": cls.UPPER,
            "unibool": cls.UNI, "uni": cls.UNI, "u": cls.UNI,
            "wellbehaved": cls.WELL_BEHAVED, "w": cls.WELL_BEHAVED,
            "hall": cls.HALL, "h": cls.HALL,
            "reflexive": cls.REFLEXIVE, "r": cls.REFLEXIVE,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown family {text!r}") from None


class IdempotentSet(enum.Enum):
    ALL = "AllIdempotents"
    UNIT_DIAGONAL = "UnitDiagonalU"


class Relation(enum.Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"
    RSTAR = "Rstar"
    LSTAR = "Lstar"
    RTILDE = "Rtilde"
    LTILDE = "Ltilde"
    RTILDE_U = "RtildeU"
    LTILDE_U = "LtildeU"


_DUAL = {
    Relation.L: Relation.R,
    Relation.LSTAR: Relation.RSTAR,
    Relation.LTILDE: Relation.RTILDE,
    Relation.LTILDE_U: Relation.RTILDE_U,
}

_MAX_N = {
    Family.FULL: 4, Family.WELL_BEHAVED: 4, Family.HALL: 4, Family.REFLEXIVE: 4,
    Family.UPPER: 5, Family.UNI: 5,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    idempotent_set: IdempotentSet = IdempotentSet.ALL

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.parse(self.family))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.n > _MAX_N[self.family]:
            raise TooLarge(f"{self.family.value} is limited to n <= {_MAX_N[self.family]}")

    @property
    def free_entries(self) -> int | None:
        n = self.n
        return {
            Family.FULL: n * n,
            Family.UPPER: n * (n + 1) // 2,
            Family.UNI: n * (n - 1) // 2,
        }.get(self.family)


# -- bit helpers ------------------------------------------------------------

def rows_of(bits: int, n: int) -> tuple:
    mask = (1 << n) - 1
    return tuple((bits >> (i * n)) & mask for i in range(n))


def from_rows(rows, n: int) -> int:
    out = 0
    for i, r in enumerate(rows):
        out |= r << (i * n)
    return out


def combos(rows) -> list:
    """combos(rows)[m] = join of the rows whose index is set in m."""
    n = len(rows)
    out = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        out[m] = out[m & (m - 1)] | rows[low]
    return out


def bmul(a: int, b: int, n: int) -> int:
    comb = combos(rows_of(b, n))
    return from_rows((comb[r] for r in rows_of(a, n)), n)


def btranspose(bits: int, n: int) -> int:
    out = 0
    for i in range(n):
        for j in range(n):
            if bits >> (i * n + j) & 1:
                out |= 1 << (j * n + i)
    return out


def bdelta(bits: int, n: int) -> int:
    out = 0
    for i in range(n):
        for j in range(n):
            if bits >> (i * n + j) & 1:
                out |= 1 << ((n - 1 - j) * n + (n - 1 - i))
    return out


def bidentity(n: int) -> int:
    return sum(1 << (i * n + i) for i in range(n))


def is_bidempotent(bits: int, n: int) -> bool:
    return bmul(bits, bits, n) == bits


def _diag_mask(n):
    return bidentity(n)


def _upper_mask(n):
    return sum(1 << (i * n + j) for i in range(n) for j in range(i, n))


def _no_zero_lines(bits, n):
    rows = rows_of(bits, n)
    if any(r == 0 for r in rows):
        return False
    cols = 0
    for r in rows:
        cols |= r
    return cols == (1 << n) - 1


def _has_permutation(bits, n):
    rows = rows_of(bits, n)
    return any(all(rows[i] >> p[i] & 1 for i in range(n))
               for p in _perms(n))


@lru_cache(maxsize=None)
def _perms(n):
    return tuple(itertools.permutations(range(n)))


def _subsets_of_mask(mask: int):
    """All sub-masks of mask in increasing numeric order."""
    positions = [b for b in range(mask.bit_length()) if mask >> b & 1]
    out = []
    for k in range(1 << len(positions)):
        v = 0
        for t, b in enumerate(positions):
            if k >> t & 1:
                v |= 1 << b
        out.append(v)
    out.sort()
    return out


@lru_cache(maxsize=None)
def enumerate_bits(family: Family, n: int) -> tuple:
    spec = FamilySpec(family, n)
    if family is Family.FULL:
        return tuple(range(1 << (n * n)))
    if family is Family.UPPER:
        return tuple(_subsets_of_mask(_upper_mask(n)))
    if family is Family.UNI:
        d = _diag_mask(n)
        return tuple(sorted(d | s for s in _subsets_of_mask(_upper_mask(n) & ~d)))
    full = enumerate_bits(Family.FULL, n)
    if spec.family is Family.WELL_BEHAVED:
        return tuple(b for b in full if _no_zero_lines(b, n))
    if spec.family is Family.HALL:
        return tuple(b for b in full if _has_permutation(b, n))
    d = _diag_mask(n)
    return tuple(b for b in full if b & d == d)


def _anti(family: Family):
    return bdelta if family in (Family.UPPER, Family.UNI) else btranspose


# -- the table ---------------------------------------------------------------

class FiniteMonoidTable:
    """A finite Boolean matrix monoid with its multiplication table."""

    def __init__(self, spec: FamilySpec, allow_large: bool = False):
        self.spec = spec
        self.n = n = spec.n
        self.elements = enumerate_bits(spec.family, n)
        size = len(self.elements)
        if size > HARD_CAP:
            raise TooLarge(f"{size} elements exceed the hard cap")
        if size > TABLE_CAP and not allow_large:
            raise TooLarge(f"{size} elements: full tables are opt-in above {TABLE_CAP}")
        self.index = {b: k for k, b in enumerate(self.elements)}
        if bidentity(n) not in self.index:
            raise AssertionError("family is not a monoid")
        rows = [rows_of(b, n) for b in self.elements]
        combs = [combos(r) for r in rows]
        index = self.index
        shifts = [i * n for i in range(n)]
        table = []
        for ra in rows:
            line = []
            for cb in combs:
                v = 0
                for r, s in zip(ra, shifts):
                    v |= cb[r] << s
                line.append(index[v])
            table.append(line)
        self.table = table
        self.idempotents = tuple(k for k in range(size) if table[k][k] == k)
        d = _diag_mask(n)
        self.unit_idempotents = tuple(k for k in self.idempotents if self.elements[k] & d == d)
        anti = _anti(spec.family)
        self.phi = tuple(index[anti(b, n)] for b in self.elements)
        self._cache = {}

    def __len__(self):
        return len(self.elements)

    def matrix(self, k: int) -> Matrix:
        return from_bits(self.elements[k], self.n)

    def lookup(self, A: Matrix) -> int:
        return self.index[to_bits(A)]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def partition(self, rel: Relation) -> "RelationPartition":
        if rel not in self._cache:
            self._cache[rel] = compute_relation(self, rel)
        return self._cache[rel]


@dataclass
class RelationPartition:
    relation: Relation
    class_id: list
    classes: list
    idempotents: list = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def idempotent_free(self) -> list:
        return [c for c, es in enumerate(self.idempotents) if not es]

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]

    def refines(self, other: "RelationPartition") -> bool:
        """Every class of self lies inside one class of other."""
        return all(len({other.class_id[x] for x in cls}) == 1 for cls in self.classes)

    def summary(self) -> dict:
        return {
            "relation": self.relation.value,
            "class_count": self.class_count,
            "idempotent_free_classes": len(self.idempotent_free()),
        }


def _from_signatures(rel, sigs, idem_members) -> RelationPartition:
    ids = {}
    class_id = []
    classes = []
    for k, s in enumerate(sigs):
        c = ids.get(s)
        if c is None:
            c = ids[s] = len(classes)
            classes.append([])
        class_id.append(c)
        classes[c].append(k)
    idem = [[] for _ in classes]
    for e in idem_members:
        idem[class_id[e]].append(e)
    return RelationPartition(rel, class_id, classes, idem)


def _kernel_fingerprint(values) -> tuple:
    labels = {}
    return tuple(labels.setdefault(v, len(labels)) for v in values)


def _signatures(table: FiniteMonoidTable, rel: Relation) -> list:
    T = table.table
    N = len(table)
    if rel is Relation.R:
        return [frozenset(T[a]) for a in range(N)]
    if rel is Relation.RSTAR:
        cols = list(zip(*T))
        return [_kernel_fingerprint(cols[a]) for a in range(N)]
    if rel in (Relation.RTILDE, Relation.RTILDE_U):
        es = table.idempotents if rel is Relation.RTILDE else table.unit_idempotents
        return [tuple(e for e in es if T[e][a] == a) for a in range(N)]
    raise ValueError(rel)


def left_signatures_direct(table: FiniteMonoidTable, rel: Relation) -> list:
    """Left-handed signatures computed from the table without the anti-automorphism."""
    T = table.table
    N = len(table)
    if rel is Relation.L:
        return [frozenset(T[x][a] for x in range(N)) for a in range(N)]
    if rel is Relation.LSTAR:
        return [_kernel_fingerprint(T[a]) for a in range(N)]
    if rel in (Relation.LTILDE, Relation.LTILDE_U):
        es = table.idempotents if rel is Relation.LTILDE else table.unit_idempotents
        return [tuple(e for e in es if T[a][e] == a) for a in range(N)]
    raise ValueError(rel)


def compute_relation(table: FiniteMonoidTable, rel: Relation) -> RelationPartition:
    rel = Relation(rel)
    idem = table.unit_idempotents if rel in (Relation.RTILDE_U, Relation.LTILDE_U) else table.idempotents
    if rel in (Relation.R, Relation.RSTAR, Relation.RTILDE, Relation.RTILDE_U):
        return _from_signatures(rel, _signatures(table, rel), idem)
    if rel in _DUAL:
        right = table.partition(_DUAL[rel])
        sigs = [right.class_id[table.phi[a]] for a in range(len(table))]
        return _from_signatures(rel, sigs, idem)
    R = table.partition(Relation.R)
    L = table.partition(Relation.L)
    if rel is Relation.H:
        sigs = list(zip(R.class_id, L.class_id))
        return _from_signatures(rel, sigs, idem)
    if rel is Relation.D:
        parent = list(range(len(table)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (R, L):
            for cls in part.classes:
                root = find(cls[0])
                for x in cls[1:]:
                    rx = find(x)
                    if rx != root:
                        parent[rx] = root
        return _from_signatures(rel, [find(a) for a in range(len(table))], idem)
    raise ValueError(rel)


# -- classification ----------------------------------------------------------

@dataclass
class ClassificationReport:
    family: str
    n: int
    flags: dict
    counts: dict
    relation_summaries: list
    witnesses: dict

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "flags": dict(self.flags),
            "counts": dict(self.counts),
            "relation_summaries": list(self.relation_summaries),
            "witnesses": dict(self.witnesses),
        }


def _regular_witness(table: FiniteMonoidTable):
    T = table.table
    N = len(table)
    for a in range(N):
        row = T[a]
        if not any(T[row[x]][a] == a for x in range(N)):
            return a
    return None


def _first_free(table, rels):
    for rel in rels:
        part = table.partition(rel)
        free = part.idempotent_free()
        if free:
            return rel, part.classes[free[0]][0]
    return None


def _bits_rows(table, k):
    n = table.n
    return [[(table.elements[k] >> (i * n + j)) & 1 for j in range(n)] for i in range(n)]


def classify(spec: FamilySpec | FiniteMonoidTable) -> ClassificationReport:
    table = spec if isinstance(spec, FiniteMonoidTable) else FiniteMonoidTable(spec)
    spec = table.spec
    flags = {}
    witnesses = {}
    bad = _regular_witness(table)
    flags["regular"] = bad is None
    if bad is not None:
        witnesses["non_regular"] = _bits_rows(table, bad)
    for flag, rels in (
        ("abundant", (Relation.RSTAR, Relation.LSTAR)),
        ("fountain", (Relation.RTILDE, Relation.LTILDE)),
        ("u_fountain", (Relation.RTILDE_U, Relation.LTILDE_U)),
    ):
        hit = _first_free(table, rels)
        flags[flag] = hit is None
        if hit is not None:
            witnesses[f"non_{flag}"] = {"relation": hit[0].value, "element": _bits_rows(table, hit[1])}
    if (flags["regular"] and not flags["abundant"]) or (flags["abundant"] and not flags["fountain"]):
        raise AssertionError("flag monotonicity violated")
    counts = {
        "elements": len(table),
        "idempotents": len(table.idempotents),
        "unit_idempotents": len(table.unit_idempotents),
    }
    summaries = [table.partition(r).summary() for r in Relation]
    return ClassificationReport(spec.family.value, spec.n, flags, counts, summaries, witnesses)


# -- witnesses for the failure of Fountainicity / abundance -------------------

NOT_FOUNTAIN_A = ((0, 1, 1, 1), (0, 1, 1, 0), (0, 0, 1, 1), (0, 0, 0, 1))
NOT_FOUNTAIN_F1 = ((0, 1, 1, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
NOT_FOUNTAIN_F2 = ((0, 1, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
NOT_ABUNDANT_A = ((1, 1, 0), (0, 1, 1), (0, 0, 1))


def zero_one_matrix(rows, kind: Kind = Kind.BOOLEAN, n: int | None = None,
                    pad_identity: bool = False) -> Matrix:
    """0/1 pattern as a matrix of ZERO/ONE entries, optionally padded to size n."""
    m = len(rows)
    n = m if n is None else n
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            if i < m and j < m:
                line.append(ONE if rows[i][j] else ZERO)
            else:
                line.append(ONE if (pad_identity and i == j) else ZERO)
        out.append(line)
    return Matrix(out, kind)


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object

    def join(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), max(self.hi, other.hi))

    def disjoint(self, other: "Interval") -> bool:
        return self.hi < other.lo or other.hi < self.lo


def fixer_intervals(A: Matrix) -> list:
    """Entrywise bounds on every X with XA = A.

    The upper bound is the residual A / A.  An entry is pinned to that bound
    when it is the only term able to attain some non-zero entry of A.  Returns
    None if some non-zero entry cannot be attained at all.
    """
    hi = residual_right(A, A)
    n = A.n
    lo = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            a = A[i, j]
            if a is ZERO:
                continue
            attain = [k for k in range(n)
                      if hi[i, k] is not ZERO and A[k, j] is not ZERO
                      and hi[i, k] + A[k, j] == a]
            if not attain:
                return None
            if len(attain) == 1:
                lo[i][attain[0]] = hi[i, attain[0]]
    return [[Interval(lo[i][k], hi[i, k]) for k in range(n)] for i in range(n)]


def _row_product_interval(F: Matrix, iv, i: int, j: int) -> Interval:
    """Bounds on (F X)_{i,j} for F with entries in {ZERO, ONE}."""
    out = Interval(ZERO, ZERO)
    for k in range(F.n):
        if F[i, k] is not ZERO:
            out = out.join(iv[k][j])
    return out


def interval_contradiction(A: Matrix, fixers) -> dict | None:
    """Find an entry where two of X, F1 X, F2 X, ... have disjoint bounds."""
    iv = fixer_intervals(A)
    if iv is None:
        return {"reason": "XA = A has no solution"}
    n = A.n
    for i in range(n):
        for j in range(n):
            exprs = [("X", iv[i][j])] + [
                (f"F{t + 1}X", _row_product_interval(F, iv, i, j)) for t, F in enumerate(fixers)
            ]
            for (na, ia), (nb, ib) in ((p, q) for p in exprs for q in exprs if p[0] < q[0]):
                if ia.disjoint(ib):
                    return {
                        "entry": (i + 1, j + 1),
                        na: [ia.lo, ia.hi],
                        nb: [ib.lo, ib.hi],
                    }
    return None


def _bool_fixing_scan(A_bits: int, f_bits, n: int) -> list:
    """All X in M_n(B) with XA = A and F X = X for each F (brute force)."""
    out = []
    comb = combos(rows_of(A_bits, n))
    for x in range(1 << (n * n)):
        if from_rows((comb[r] for r in rows_of(x, n)), n) != A_bits:
            continue
        if all(bmul(f, x, n) == x for f in f_bits):
            out.append(x)
    return out


@lru_cache(maxsize=None)
def bool_idempotents(n: int) -> tuple:
    """Idempotents of M_n(B) as bit masks, by exhaustive scan."""
    if n > 4:
        raise TooLarge("idempotent scan limited to n <= 4")
    return tuple(b for b in range(1 << (n * n)) if is_bidempotent(b, n))


def bool_rtilde_idempotents(A_bits: int, n: int) -> list:
    """Idempotents of M_n(B) with the same set of fixing idempotents as A."""
    E = bool_idempotents(n)
    sig = frozenset(e for e in E if bmul(e, A_bits, n) == A_bits)
    out = []
    for f in sig:
        if all((bmul(e, f, n) == f) == (e in sig) for e in E):
            out.append(f)
    return sorted(out)


def check_not_fountain_witness(n: int = 4, kind: Kind = Kind.BOOLEAN) -> Proof:
    """Certify that the 4 x 4 witness (in the top-left corner) has no R~-related idempotent.

    Any idempotent E with E ~R A' is fixed by the idempotents F1', F2' that fix
    A'.  F1' fixing E kills the rows of E below the corner, so the corner block X
    of E satisfies XA = A, F1 X = X and F2 X = X.  That system is shown to have
    no solution: by exhaustive scan over Boolean 4 x 4 matrices, and by an
    interval argument that holds over any linearly ordered kind.
    """
    if n < 4:
        raise ValueError("the witness needs n >= 4")
    kind = Kind(kind)
    A4 = zero_one_matrix(NOT_FOUNTAIN_A, kind)
    F1 = zero_one_matrix(NOT_FOUNTAIN_F1, kind)
    F2 = zero_one_matrix(NOT_FOUNTAIN_F2, kind)
    A, G1, G2 = (embed_corner(M, n) for M in (A4, F1, F2))
    proof = Proof("not_fountain", {"n": n, "kind": kind.value, "A": A, "F1": G1, "F2": G2})
    proof.check("F1 A = A", mat_mul(G1, A) == A)
    proof.check("F2 A = A", mat_mul(G2, A) == A)
    proof.check("F1 idempotent", mat_mul(G1, G1) == G1)
    proof.check("F2 idempotent", mat_mul(G2, G2) == G2)
    proof.check("all matrices upper triangular", all(M.is_upper for M in (A, G1, G2)))
    contra = interval_contradiction(A4, [F1, F2])
    proof.check("interval replay: XA = A, F1X = X, F2X = X is inconsistent", contra is not None, contra)
    if kind is Kind.BOOLEAN:
        a, f1, f2 = (to_bits(M) for M in (A4, F1, F2))
        sols = _bool_fixing_scan(a, (f1, f2), 4)
        proof.check("exhaustive scan: no 4x4 Boolean X solves the system", not sols,
                    {"solutions": len(sols), "scanned": 1 << 16})
        if n == 4:
            rel = bool_rtilde_idempotents(a, 4)
            proof.check("exhaustive scan: no idempotent of M_4(B) is R~-related to A", not rel,
                        {"idempotents": len(bool_idempotents(4)), "related": len(rel)})
    return proof


def _pattern_product(P: Matrix, i: int, j: int, ones_on_diag: int) -> frozenset:
    """Symbols of (P E)_{i,j} for a 0/1 matrix P and an unknown upper E.

    Entries E_{k,k} with k < ones_on_diag are replaced by the symbol "1".
    """
    out = set()
    for k in range(P.n):
        if P[i, k] is ZERO or k > j:
            continue
        out.add("1" if (k == j and k < ones_on_diag) else f"E{k + 1}{j + 1}")
    return frozenset(out)


def check_not_abundant_witness(n: int = 3, kind: Kind = Kind.BOOLEAN, uni: bool = False) -> Proof:
    """Certify that the 3 x 3 corner witness is R*-related to no idempotent.

    The argument is replayed on pairs (P, Q) with PA = QA: each such pair must
    also satisfy PE = QE, and reading off one entry forces E_12 >= 1, then
    E_23 >= 1.  With those bounds (I, V) lies in the kernel of E but not of A.
    For Boolean n = 3 the R*-partition of the monoid is inspected directly.
    """
    if n < 3:
        raise ValueError("the witness needs n >= 3")
    kind = Kind(kind)
    A = zero_one_matrix(NOT_ABUNDANT_A, kind, n, pad_identity=uni)
    proof = Proof("not_abundant", {"n": n, "kind": kind.value, "uni": uni, "A": A})

    def pat(entries):
        rows = [[0] * n for _ in range(n)]
        for i, j in entries:
            rows[i - 1][j - 1] = 1
        if uni:
            for i in range(n):
                rows[i][i] = 1
        return zero_one_matrix(rows, kind)

    I = identity(n, kind)
    # E_ii = 1 for i <= 3: otherwise (E, I) is in K(E) but EA != A on the diagonal.
    proof.check("A has unit diagonal entries at 1..3", all(A[i, i] == ONE for i in range(3)))
    pairs = [
        ("E12 >= 1", pat([(1, 1), (1, 2)]), pat([(1, 1), (1, 3)]), (0, 1)),
        ("E23 >= 1", pat([(1, 3), (2, 2), (2, 3)]), pat([(2, 2), (1, 3)]), (1, 2)),
    ]
    for label, P, Q, (i, j) in pairs:
        proof.check(f"({label}) PA = QA", mat_mul(P, A) == mat_mul(Q, A))
        p_sym = _pattern_product(P, i, j, 3)
        q_sym = _pattern_product(Q, i, j, 3)
        target = f"E{i + 1}{j + 1}"
        forced = p_sym - q_sym == {"1"} and q_sym - {"1"} <= {target} and target in q_sym
        proof.check(f"({label}) PE = QE forces it", forced,
                    {"PE": sorted(p_sym), "QE": sorted(q_sym)})
    # E13 = (E^2)_13 >= E12 E23 >= 1, and row 1 of an idempotent dominates E13 * row 3.
    V = pat([(1, 3)] + [(k, k) for k in range(1, n + 1)])
    proof.check("(I, V) not in K(A)", mat_mul(I, A) != mat_mul(V, A))
    proof.check("V E = E once E13 >= 1 (row 1 of V E adds E13-dominated row 3)",
                _pattern_product(V, 0, 2, 3) == {"E13", "1"})
    if kind is Kind.BOOLEAN and n == 3:
        family = Family.UNI if uni else Family.UPPER
        table = FiniteMonoidTable(FamilySpec(family, 3))
        k = table.lookup(A)
        part = table.partition(Relation.RSTAR)
        proof.check("partition inspection: R*-class of A has no idempotent",
                    not part.idempotents[part.class_id[k]],
                    {"class_size": len(part.classes[part.class_id[k]])})
    return proof


# -- column spaces, ColStab/ColFix and exactness ------------------------------

def col_space(bits: int, n: int) -> frozenset:
    """Column space of a Boolean matrix as a set of column masks (bit i = row i)."""
    cols = [sum(((bits >> (i * n + j)) & 1) << i for i in range(n)) for j in range(n)]
    return frozenset(combos(cols))


def row_space(bits: int, n: int) -> frozenset:
    return frozenset(combos(rows_of(bits, n)))


@dataclass
class ColFix:
    colstab: list
    colfix: frozenset
    idempotent: int | None

    @property
    def realized(self) -> bool:
        return self.idempotent is not None


def colstab_colfix(A: Matrix | int, n: int | None = None) -> ColFix:
    """ColStab(A) = idempotents fixing A; ColFix(A) = meet of their column spaces."""
    if isinstance(A, Matrix):
        if A.kind is not Kind.BOOLEAN:
            raise ValueError("colstab_colfix is Boolean only")
        n, A = A.n, to_bits(A)
    if n > 4:
        raise TooLarge("colstab_colfix is limited to n <= 4")
    E = bool_idempotents(n)
    stab = [e for e in E if bmul(e, A, n) == A]
    fix = frozenset(range(1 << n))
    for e in stab:
        fix &= col_space(e, n)
    match = next((e for e in stab if col_space(e, n) == fix), None)
    if match is None:
        match = next((e for e in E if col_space(e, n) == fix), None)
    return ColFix(stab, fix, match)


@dataclass
class ExactnessReport:
    n: int
    pairs: int
    f1_failures: list
    f2_failures: list

    @property
    def holds(self) -> bool:
        return not self.f1_failures and not self.f2_failures


def _refines(f, g) -> bool:
    seen = {}
    for a, b in zip(f, g):
        if seen.setdefault(a, b) != b:
            return False
    return True


def bool_exactness_check(n: int) -> ExactnessReport:
    """(F1) and (F2) for all pairs of n x n Boolean matrices.

    (F2): the kernel {(v, v'): vA = v'A} is contained in that of B exactly when
    Col(B) is inside Col(A).  (F1) is the same statement for Au = Au' and row
    spaces.  Kernels are compared as partitions of the 2^n Boolean vectors.
    """
    if n > 3:
        raise TooLarge("exactness check limited to n <= 3")
    N = 1 << (n * n)
    left_ker, right_ker, cols, rows = [], [], [], []
    for b in range(N):
        left_ker.append(tuple(combos(rows_of(b, n))))
        t = btranspose(b, n)
        right_ker.append(tuple(combos(rows_of(t, n))))
        cols.append(sum(1 << v for v in col_space(b, n)))
        rows.append(sum(1 << v for v in row_space(b, n)))
    f1, f2 = [], []
    for a in range(N):
        for b in range(N):
            if _refines(left_ker[a], left_ker[b]) != (cols[b] & ~cols[a] == 0):
                f2.append((a, b))
            if _refines(right_ker[a], right_ker[b]) != (rows[b] & ~rows[a] == 0):
                f1.append((a, b))
    return ExactnessReport(n, N * N, f1, f2)
