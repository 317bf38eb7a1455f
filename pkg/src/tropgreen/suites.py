"""Batch verification suites, one per checked result.

Each suite takes a ``SuiteConfig`` and returns a ``SuiteReport`` listing
named assertions.  Sampling is driven by ``random.Random(seed)`` so reports
are reproducible.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import generators as gen
from .certificates import to_jsonable
from .deficiency import (
    DefMode,
    Path,
    anchored_reduction,
    conjugate,
    d_related_unitriangular,
    deficiency,
    first_difference,
    ht_class_descriptor,
    ht_closure_check,
    ht_membership,
    leftcong_check,
    pattern_idempotent,
    ht_nonclosure_witness,
    realizable_patterns,
    rtilde_noncommute_witness,
    same_plus_pair,
    theta_preservation,
)
from .factorization import ef_power_identities, idempotent_factorize
from .finite_green import (
    Family,
    FamilySpec,
    FiniteMonoidTable,
    Relation,
    bool_exactness_check,
    check_not_fountain_witness,
    classify,
)
from .matrix import Matrix, Shape, from_bits, mat_mul
from .plusstar import is_idempotent, is_regular, plus_of, residual_right, star_of
from .semiring import ONE, ZERO, Kind


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    trials: int | None = None
    n: int | None = None
    g: Fraction = Fraction(1)


@dataclass
class SuiteReport:
    name: str
    config: SuiteConfig
    assertions: list = field(default_factory=list)
    witness: dict | None = None
    elapsed: float = 0.0

    def check(self, aid: str, passed: bool, detail=None, witness=None) -> bool:
        self.assertions.append({"id": aid, "passed": bool(passed), "detail": detail})
        if not passed and self.witness is None:
            self.witness = {"assertion": aid, **(witness or {})}
        return bool(passed)

    @property
    def passed(self) -> bool:
        return bool(self.assertions) and all(a["passed"] for a in self.assertions)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "seed": self.config.seed,
            "trials": self.config.trials,
            "n": self.config.n,
            "passed": self.passed,
            "assertions": to_jsonable(self.assertions),
            "witness": to_jsonable(self.witness),
        }


def _sizes(cfg: SuiteConfig, default):
    return [cfg.n] if cfg.n is not None else list(default)


def _trials(cfg: SuiteConfig, default: int) -> int:
    return default if cfg.trials is None else cfg.trials


# -- Boolean classification ------------------------------------------------------

CLASSIFICATION_TABLE = {
    (Family.FULL, 1): "regular", (Family.FULL, 2): "regular", (Family.FULL, 3): "fountain",
    (Family.UPPER, 1): "regular", (Family.UPPER, 2): "abundant", (Family.UPPER, 3): "fountain",
    (Family.UNI, 1): "regular", (Family.UNI, 2): "regular", (Family.UNI, 3): "fountain",
}


def strongest(flags: dict) -> str:
    for name in ("regular", "abundant", "fountain"):
        if flags[name]:
            return name
    return "none"


def suite_classification(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("thmB", cfg)
    for (family, n), expected in CLASSIFICATION_TABLE.items():
        if cfg.n is not None and n != cfg.n:
            continue
        r = classify(FamilySpec(family, n))
        got = strongest(r.flags)
        rep.check(f"{family.value}{n}", got == expected,
                  {"expected": expected, "got": got, "flags": r.flags, "counts": r.counts},
                  {"report": r.to_json()})
        if (family, n) == (Family.UPPER, 3):
            rep.check("UpperBool3 counts", r.counts["elements"] == 64 and r.counts["idempotents"] == 41,
                      r.counts)
    return rep


def suite_u4_fountain(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("u4-fountain", cfg)
    table = FiniteMonoidTable(FamilySpec(Family.UNI, 4))
    rep.check("64 elements", len(table) == 64, len(table))
    for rel, op in ((Relation.RTILDE, plus_of), (Relation.LTILDE, star_of)):
        part = table.partition(rel)
        single = all(len(es) == 1 for es in part.idempotents)
        rep.check(f"{rel.value}: one idempotent per class", single,
                  {"classes": part.class_count})
        bad = []
        for cls, es in zip(part.classes, part.idempotents):
            if len(es) != 1:
                continue
            e = table.matrix(es[0])
            bad += [k for k in cls if op(table.matrix(k)) != e]
        rep.check(f"{rel.value}: idempotent = {op.__name__} of every member", not bad,
                  {"mismatches": len(bad)},
                  {"element": table.matrix(bad[0])} if bad else None)
    return rep


def suite_not_fountain(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("not-fountain", cfg)
    for n in _sizes(cfg, [4]):
        for kind in (Kind.BOOLEAN, Kind.MAXPLUS):
            p = check_not_fountain_witness(n, kind)
            rep.check(f"n={n} {kind.value}", p.verdict,
                      [c.label for c in p.certificates], {"proof": p.to_json()})
    return rep


# -- max-plus sampling suites ------------------------------------------------------

def _ints(M: Matrix, d: int):
    f = d // M.den
    return [[v if v is ZERO else v * f for v in r] for r in M.num]


def _row_times(row, cols):
    """Max-plus row vector times the matrix whose columns are ``cols``."""
    out = []
    for col in cols:
        best = ZERO
        for x, c in zip(row, col):
            if x is not ZERO and c is not ZERO:
                s = x + c
                if best is ZERO or s > best:
                    best = s
        out.append(best)
    return out


def _le(x, y):
    return x is ZERO or (y is not ZERO and x <= y)


def _maximality_faults(rng: random.Random, A: Matrix, E: Matrix, fixers: int, zero_prob: float):
    """Random X with XA = A, built as (Y meet H) join I with H = A / A; checks X <= E, XE <= E.

    Works row by row on integer numerators over one denominator; Y has
    entries k/q with q <= 4.
    """
    n = A.n
    H = residual_right(A, A)
    if H.has_top():
        raise AssertionError("A / A has a top entry although dom(A) = [n]")
    d = math.lcm(A.den, H.den, E.den, 12)
    a, h, e = _ints(A, d), _ints(H, d), _ints(E, d)
    a_cols, e_cols = list(zip(*a)), list(zip(*e))
    b = gen.DEFAULT.bound
    values = sorted({k * (d // q) for k in range(-b, b + 1) for q in range(1, 5)})
    rand, choice = rng.random, rng.choice
    for _ in range(fixers):
        for i in range(n):
            row = []
            for j, hv in enumerate(h[i]):
                if hv is ZERO or rand() < zero_prob:
                    v = ZERO
                else:
                    v = min(choice(values), hv)
                if i == j and (v is ZERO or v < 0):
                    v = 0
                row.append(v)
            if _row_times(row, a_cols) != a[i]:
                raise AssertionError("fixer construction failed")
            if not all(_le(x, y) for x, y in zip(row, e[i])):
                return True
            if not all(_le(x, y) for x, y in zip(_row_times(row, e_cols), e[i])):
                return True
    return False


def suite_idmpt(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("idmpt", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 1000)
    scfg = gen.SamplerConfig(zero_prob=0.25)
    for n in _sizes(cfg, range(2, 7)):
        bad = {"idempotent": 0, "left identity": 0, "maximal": 0}
        first = None
        for _ in range(trials):
            A = gen.full_domain(rng, n, scfg)
            E = plus_of(A)
            faults = []
            if not is_idempotent(E):
                faults.append("idempotent")
            if mat_mul(E, A) != A:
                faults.append("left identity")
            if _maximality_faults(rng, A, E, 200, scfg.zero_prob):
                faults.append("maximal")
            for f in faults:
                bad[f] += 1
            if faults and first is None:
                first = {"A": A}
        rep.check(f"n={n}", not any(bad.values()), bad, first)
    return rep


def suite_factorization(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("idmpgensmgp", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 1000)
    sparse = gen.SamplerConfig(zero_prob=0.3)
    for n in _sizes(cfg, range(2, 9)):
        for label, positive, scfg in (("Qmax", False, sparse), ("positive", True, gen.DEFAULT)):
            fails = 0
            first = None
            for _ in range(trials):
                X = gen.unitriangular(rng, n, scfg, positive=positive)
                try:
                    res = idempotent_factorize(X)
                    ok = (all(is_idempotent(F) for F in res.factors)
                          and (n == 1 or res.product() == X)
                          and len(res.factors) <= n - 1)
                    if positive:
                        ok = ok and all(Shape.POSITIVE_UPPER in F.shapes for F in res.factors)
                except AssertionError:
                    ok = False
                if not ok:
                    fails += 1
                    first = first or {"X": X}
            rep.check(f"n={n} {label}", fails == 0, {"trials": trials, "failures": fails}, first)
    return rep


def suite_ef_power(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("ef-power", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 500)
    for n in _sizes(cfg, range(3, 7)):
        m = math.ceil((n + 1) / 2)
        fails, first = 0, None
        for t in range(trials):
            positive = t % 2 == 0
            scfg = gen.DEFAULT if positive else gen.SamplerConfig(zero_prob=0.3)
            E = gen.idempotent_unitriangular(rng, n, scfg, positive=positive)
            F = gen.idempotent_unitriangular(rng, n, scfg, positive=positive)
            r = ef_power_identities(E, F, m)
            if not r.verified:
                fails += 1
                first = first or {"E": E, "F": F, "m": m}
        rep.check(f"n={n} m={m}", fails == 0, {"trials": trials, "failures": fails}, first)
    return rep


def _random_path(rng: random.Random, n: int) -> Path:
    k = rng.randint(2, n)
    return Path(tuple(sorted(rng.randint(1, n) for _ in range(k + 1))))


def suite_deficiency(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("deficiency", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 500)
    sizes = _sizes(cfg, range(3, 7))
    agree_fail = sep_fail = reduce_fail = 0
    first = None
    for t in range(trials):
        n = sizes[t % len(sizes)]
        M = gen.positive_upper(rng, n)
        N = conjugate(M, [gen.rational(rng) for _ in range(n)])
        ok = first_difference(M, N, DefMode.ONE_ANCHORED) is None
        for _ in range(50):
            p = _random_path(rng, n)
            ok = ok and deficiency(M, p) == deficiency(N, p)
            if anchored_reduction(M, p) != deficiency(M, p):
                reduce_fail += 1
        if not ok:
            agree_fail += 1
            first = first or {"M": M, "N": N}
        P = gen.positive_upper(rng, n)
        p = first_difference(M, P, DefMode.LENGTH2)
        if p is None or p.length != 2 or deficiency(M, p) == deficiency(P, p):
            sep_fail += 1
            first = first or {"M": M, "P": P}
    rep.check("conjugate pairs agree on random paths", agree_fail == 0,
              {"pairs": trials, "failures": agree_fail}, first)
    rep.check("anchored reduction identity", reduce_fail == 0, {"failures": reduce_fail})
    rep.check("independent pairs separated by a length-2 path", sep_fail == 0,
              {"pairs": trials, "failures": sep_fail}, first)
    return rep


def suite_d_class(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("d-class", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 500)
    sizes = _sizes(cfg, range(2, 7))
    fails, first = 0, None
    for t in range(trials):
        n = sizes[t % len(sizes)]
        A = gen.unitriangular(rng, n, positive=True)
        g = [gen.rational(rng) for _ in range(n)]
        B = conjugate(A, g)
        res = d_related_unitriangular(A, B)
        ok = res.related and res.conjugator is not None
        if ok:
            shift = {res.conjugator[i, i] - g[i] for i in range(n)}
            ok = len(shift) == 1
        if not ok:
            fails += 1
            first = first or {"A": A, "B": B}
    rep.check("conjugator recovered", fails == 0, {"pairs": trials, "failures": fails}, first)
    for n in _sizes(cfg, [4, 5]):
        if n < 4:
            continue
        p = rtilde_noncommute_witness(n, cfg.g)
        rep.check(f"noncommute witness n={n}", p.verdict, [c.label for c in p.certificates],
                  {"proof": p.to_json()})
    return rep


def suite_ht_tables(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("ht-tables", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 200)
    pats = []
    for n in _sizes(cfg, [3, 4]):
        pats += realizable_patterns(n) if n in (3, 4) else []
    for pat in pats:
        E = pattern_idempotent(pat, rng)
        d = ht_class_descriptor(E)
        mem = sum(ht_membership(E, d.sample_member(rng), d) for _ in range(trials))
        non = sum(not ht_membership(E, d.sample_nonmember(rng), d) for _ in range(trials))
        clo = ht_closure_check(E, trials, seed=rng.randrange(1 << 30))
        tag = f"n={pat.n} [{pat}] {d.case_id}"
        rep.check(f"{tag} members", mem == trials, {"accepted": mem}, {"E": E})
        rep.check(f"{tag} non-members", non == trials, {"rejected": non}, {"E": E})
        rep.check(f"{tag} closure", clo.closed and clo.product_law is not False,
                  clo.to_json(), {"E": E})
    return rep


def suite_ht_nonclosure(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("prop-ht", cfg)
    for n in _sizes(cfg, [5, 6]):
        p = ht_nonclosure_witness(n, cfg.g)
        rep.check(f"n={n}", p.verdict, [c.label for c in p.certificates], {"proof": p.to_json()})
    return rep


def suite_leftcong(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("leftcong", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 100)
    sizes = _sizes(cfg, range(3, 7))
    eq_fail = sep_fail = 0
    first = None
    for t in range(trials):
        n = sizes[t % len(sizes)]
        A = gen.positive_upper(rng, n)
        B = mat_mul(A, gen.diagonal(rng, n))
        r = leftcong_check(A, B, trials=100, seed=rng.randrange(1 << 30))
        if r.status != "equal":
            eq_fail += 1
            first = first or {"A": A, "B": B, "C": r.multiplier}
        A, B = same_plus_pair(rng, n)
        r = leftcong_check(A, B, trials=100, seed=rng.randrange(1 << 30))
        if r.status != "separated" or r.construction == "random":
            sep_fail += 1
            first = first or {"A": A, "B": B, "status": r.status}
    rep.check("R-related pairs: (CA)+ = (CB)+ for 100 random C", eq_fail == 0,
              {"pairs": trials, "failures": eq_fail}, first)
    rep.check("same-plus non-R pairs separated by the constructed C", sep_fail == 0,
              {"pairs": trials, "failures": sep_fail}, first)
    return rep


def _corner_one(rng: random.Random, n: int) -> Matrix:
    A = gen.positive_upper(rng, n)
    rows = [list(r) for r in A.rows]
    rows[0][0] = rows[n - 1][n - 1] = ONE
    return Matrix(rows)


def suite_theta(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("theta", cfg)
    rng = random.Random(cfg.seed)
    trials = _trials(cfg, 500)
    sizes = _sizes(cfg, range(2, 7))
    bad = {"hom": 0, "plus": 0, "star": 0}
    first = None
    for t in range(trials):
        n = sizes[t % len(sizes)]
        A, B = _corner_one(rng, n), _corner_one(rng, n)
        res = theta_preservation(A, B)
        for k, v in res.items():
            if not v:
                bad[k] += 1
                first = first or {"A": A, "B": B}
    for k, v in bad.items():
        rep.check(f"theta preserves {k}", v == 0, {"samples": trials, "failures": v}, first)
    return rep


def suite_regularity(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("regularity", cfg)
    rng = random.Random(cfg.seed)
    bad = []
    for bits in range(16):
        A = from_bits(bits, 2)
        r = is_regular(A)
        if not (r.regular and mat_mul(mat_mul(A, r.witness), A) == A):
            bad.append(A)
    rep.check("all of M2(B) regular", not bad, {"elements": 16, "failures": len(bad)},
              {"A": bad[0]} if bad else None)
    trials = _trials(cfg, 500)
    scfg = gen.SamplerConfig(zero_prob=0.2)
    fails, first = 0, None
    for _ in range(trials):
        A = gen.general(rng, 2, scfg)
        r = is_regular(A)
        if not (r.regular and mat_mul(mat_mul(A, r.witness), A) == A):
            fails += 1
            first = first or {"A": A}
    rep.check("sampled M2(Qmax) regular", fails == 0, {"samples": trials, "failures": fails}, first)
    g = cfg.g
    G = Matrix([[ONE, g, g], [ZERO, ONE, g], [ZERO, ZERO, ONE]])
    rep.check("3x3 unitriangular all-g matrix not regular", not is_regular(G).regular,
              {"G": to_jsonable(G)})
    return rep


def suite_exactness(cfg: SuiteConfig) -> SuiteReport:
    rep = SuiteReport("exactness", cfg)
    for n in _sizes(cfg, [1, 2, 3]):
        r = bool_exactness_check(n)
        rep.check(f"(F1)/(F2) n={n}", r.holds,
                  {"pairs": r.pairs, "f1": len(r.f1_failures), "f2": len(r.f2_failures)},
                  {"f1": r.f1_failures[:5], "f2": r.f2_failures[:5]})
    table = FiniteMonoidTable(FamilySpec(Family.FULL, 3))
    R, Rs = table.partition(Relation.R), table.partition(Relation.RSTAR)
    rep.check("R = R* on M3(B)", R.class_id == Rs.class_id,
              {"R_classes": R.class_count, "Rstar_classes": Rs.class_count})
    return rep


SUITES = {
    "thmB": suite_classification,
    "u4-fountain": suite_u4_fountain,
    "not-fountain": suite_not_fountain,
    "idmpt": suite_idmpt,
    "idmpgensmgp": suite_factorization,
    "ef-power": suite_ef_power,
    "deficiency": suite_deficiency,
    "d-class": suite_d_class,
    "ht-tables": suite_ht_tables,
    "prop-ht": suite_ht_nonclosure,
    "leftcong": suite_leftcong,
    "theta": suite_theta,
    "regularity": suite_regularity,
    "exactness": suite_exactness,
}


def run_suite(name: str, cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    t0 = time.perf_counter()
    rep = fn(cfg)
    rep.elapsed = time.perf_counter() - t0
    return rep
