"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails (a JSON witness file
is written), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path as FsPath

from .certificates import to_jsonable
from .deficiency import (
    DefMode,
    InconsistencyError,
    Path,
    UnrealizablePattern,
    d_related_unitriangular,
    deficiency,
    first_difference,
    ht_class_descriptor,
    ht_closure_check,
    ht_membership,
    simple_triples,
    tightness_pattern,
)
from .factorization import full_decompose, idempotent_factorize
from .finite_green import (
    Family,
    FamilySpec,
    FiniteMonoidTable,
    Relation,
    TooLarge,
    classify,
)
from .matrix import Shape, ShapeError
from .matrix_io import MatrixFormatError, parse_any, to_json_obj, to_text
from .plusstar import Unsupported, is_idempotent, is_regular, plus_of, star_of
from .semiring import KindMismatch
from .suites import SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _read_matrix(source: str):
    try:
        text = sys.stdin.read() if source == "-" else FsPath(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    mats = parse_any(text)
    if len(mats) != 1:
        raise UsageError(f"{source}: expected one matrix, found {len(mats)}")
    return mats[0]


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(to_jsonable(obj), indent=2))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- single-shot commands ------------------------------------------------------

def cmd_plus(args) -> int:
    A = _read_matrix(args.input)
    P = plus_of(A)
    _emit(args, to_text(P), to_json_obj(P))
    return 0


def cmd_star(args) -> int:
    A = _read_matrix(args.input)
    if not A.is_upper:
        raise UsageError("star needs an upper triangular matrix")
    S = star_of(A)
    _emit(args, to_text(S), to_json_obj(S))
    return 0


def cmd_idem(args) -> int:
    A = _read_matrix(args.input)
    ok = is_idempotent(A)
    _emit(args, f"idempotent: {str(ok).lower()}", {"idempotent": ok})
    return 0


def cmd_regular(args) -> int:
    A = _read_matrix(args.input)
    r = is_regular(A)
    if args.format == "json":
        _emit(args, "", {"regular": r.regular,
                         "witness": to_json_obj(r.witness) if r.witness else None})
    else:
        out = f"regular: {str(r.regular).lower()}\n"
        if r.witness is not None:
            out += "# witness X with A X A = A\n" + to_text(r.witness)
        _emit(args, out, None)
    return 0


def cmd_factor(args) -> int:
    A = _read_matrix(args.input)
    if Shape.UNITRIANGULAR in A.shapes:
        res = idempotent_factorize(A)
    elif Shape.FULL_DIAGONAL in A.shapes:
        res = full_decompose(A)
    else:
        raise UsageError("factor needs an upper triangular matrix with non-zero diagonal")
    if args.format == "json":
        _emit(args, "", {
            "factors": [dict(to_json_obj(F), idempotent=is_idempotent(F)) for F in res.factors],
            "diagonal": to_json_obj(res.diagonal) if res.diagonal is not None else None,
        })
        return 0
    parts = [f"# {len(res.factors)} factors"]
    for k, F in enumerate(res.factors, 1):
        parts.append(f"# factor {k}\n# idempotent: {str(is_idempotent(F)).lower()}\n" + to_text(F))
    if res.diagonal is not None:
        parts.append("# diagonal\n" + to_text(res.diagonal))
    _emit(args, "\n".join(parts), None)
    return 0


def cmd_deficiency(args) -> int:
    A = _read_matrix(args.input)
    A.require(Shape.POSITIVE_UPPER)
    ps = [Path.parse(p) for p in args.path] or [Path(t) for t in simple_triples(A.n)]
    values = {str(p): deficiency(A, p) for p in ps}
    result = {"deficiency": values}
    lines = [f"Def({p}) = {to_jsonable(v)}" for p, v in values.items()]
    if args.compare:
        B = _read_matrix(args.compare)
        B.require(Shape.POSITIVE_UPPER)
        if Shape.UNITRIANGULAR in A.shapes and Shape.UNITRIANGULAR in B.shapes:
            r = d_related_unitriangular(A, B)
            result["d_related"] = r.related
            result["conjugator"] = to_json_obj(r.conjugator) if r.conjugator else None
            result["separating_path"] = str(r.separating_path) if r.separating_path else None
            lines.append(f"D-related: {str(r.related).lower()}")
            if r.separating_path:
                lines.append(f"separating path: {r.separating_path}")
        else:
            p = first_difference(A, B, DefMode.LENGTH2)
            result["equal_length2"] = p is None
            result["separating_path"] = str(p) if p else None
            lines.append(f"length-2 deficiencies equal: {str(p is None).lower()}")
    _emit(args, "\n".join(lines), result)
    return 0


def cmd_tightness(args) -> int:
    E = _read_matrix(args.input)
    pat = tightness_pattern(E)
    obj = {"n": pat.n, "tight": sorted("".join(map(str, t)) for t in pat.tight),
           "loose": sorted("".join(map(str, t)) for t in pat.loose)}
    _emit(args, f"tight: {pat}\nloose: {','.join(obj['loose']) or 'none'}", obj)
    return 0


def cmd_htclass(args) -> int:
    E = _read_matrix(args.input)
    d = ht_class_descriptor(E)
    obj = {"case_id": d.case_id, "pattern": str(d.pattern), "form": d.form.value,
           "dual": d.dual, "constraint": d.constraint}
    lines = [f"case: {d.case_id}", f"pattern: {d.pattern}", f"form: {d.form.value}",
             f"constraint: {d.constraint}"]
    status = 0
    if args.member:
        A = _read_matrix(args.member)
        m = ht_membership(E, A, d)
        obj["member"] = m
        lines.append(f"member: {str(m).lower()}")
    if args.closure:
        rep = ht_closure_check(E, args.samples, seed=args.seed)
        obj["closure"] = rep.to_json()
        lines.append(f"closed on {rep.samples} samples: {str(rep.closed).lower()}")
        if rep.product_law is not None:
            lines.append(f"product law: {str(rep.product_law).lower()}")
    _emit(args, "\n".join(lines), obj)
    return status


def _table(args):
    return FiniteMonoidTable(FamilySpec(Family.parse(args.family), args.n),
                             allow_large=args.allow_large)


def cmd_greens(args) -> int:
    table = _table(args)
    rels = [Relation(args.relation)] if args.relation else list(Relation)
    out, lines = [], [f"# {table.spec.family.value} n={table.n}: {len(table)} elements"]
    for rel in rels:
        part = table.partition(rel)
        s = part.summary()
        s["class_sizes"] = sorted((len(c) for c in part.classes), reverse=True)
        out.append(s)
        lines.append(f"{rel.value}: {s['class_count']} classes, "
                     f"{s['idempotent_free_classes']} without idempotents")
    _emit(args, "\n".join(lines), {"family": table.spec.family.value, "n": table.n,
                                   "relations": out})
    return 0


def cmd_classify(args) -> int:
    rep = classify(_table(args))
    lines = [f"{rep.family} n={rep.n}"]
    lines += [f"{k}: {str(v).lower()}" for k, v in rep.flags.items()]
    lines += [f"{k}: {v}" for k, v in rep.counts.items()]
    _emit(args, "\n".join(lines), rep.to_json())
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = SuiteConfig(seed=args.seed, trials=args.trials, n=args.n, g=Fraction(args.g))
    reports = []
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
        reports.append(run_suite(name, cfg))
    failed = [r for r in reports if not r.passed]
    for r in failed:
        path = FsPath(args.witness_dir) / f"witness-{r.name}-seed{args.seed}.json"
        path.write_text(json.dumps(r.to_json(), indent=2) + "\n")
        print(f"witness written to {path}", file=sys.stderr)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        lines = [f"# seed: {args.seed}"]
        for r in reports:
            for a in r.assertions:
                lines.append(f"{'PASS' if a['passed'] else 'FAIL'} {r.name}: {a['id']}")
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
        print("\n".join(lines))
    return 1 if failed else 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")

    p = argparse.ArgumentParser(prog="tropgreen",
                                description="Green's relations for Boolean and max-plus matrices")
    sub = p.add_subparsers(dest="command", required=True)

    def single(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("input", nargs="?", default="-", help="matrix file (text or JSON), '-' for stdin")
        sp.set_defaults(func=fn)
        return sp

    single("plus", cmd_plus, "print A^(+)")
    single("star", cmd_star, "print A^(*)")
    single("idem", cmd_idem, "test idempotency")
    single("regular", cmd_regular, "decide regularity with a witness")
    single("factor", cmd_factor, "factor a unitriangular matrix into idempotents")
    sp = single("deficiency", cmd_deficiency, "path deficiencies; D-class comparison")
    sp.add_argument("--path", action="append", default=[], help="e.g. 1->2->4 (repeatable)")
    sp.add_argument("--compare", help="second matrix file")
    single("tightness", cmd_tightness, "tightness pattern of an idempotent")
    sp = single("htclass", cmd_htclass, "tilde-H class description of an idempotent")
    sp.add_argument("--member", help="matrix file to test for membership")
    sp.add_argument("--closure", action="store_true", help="sample products inside the class")
    sp.add_argument("--samples", type=int, default=200)

    for name, fn, text in (("greens", cmd_greens, "Green's relation partitions of a Boolean family"),
                           ("classify", cmd_classify, "regular / abundant / Fountain flags")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--family", required=True,
                        help="FullBool, UpperBool, UniBool, WellBehaved, Hall or Reflexive")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--allow-large", action="store_true",
                        help="permit tables above 4096 elements")
        sp.set_defaults(func=fn)
    sub.choices["greens"].add_argument("--relation", choices=[r.value for r in Relation])

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", required=True, help=f"all, {', '.join(SUITES)}")
    sp.add_argument("--trials", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--g", default="1", help="witness scalar g > 0 (default 1)")
    sp.add_argument("--witness-dir", default=".")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, MatrixFormatError, ShapeError, Unsupported, KindMismatch,
            UnrealizablePattern, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
