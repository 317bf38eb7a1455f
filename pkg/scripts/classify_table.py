"""Regular / abundant / Fountain flags of the Boolean matrix monoids.

Prints the table for M_n(B), UT_n(B) and U_n(B) with element and idempotent
counts.  UT_n(B) and U_n(B) go up to n = 4 by default; FullBool n = 4 needs
``--large`` (65536 elements, a few minutes).
"""

import argparse

from tropgreen.finite_green import Family, FamilySpec, FiniteMonoidTable, classify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--large", action="store_true")
    args = ap.parse_args()
    print(f"{'family':10s} {'n':>2s} {'size':>6s} {'idem':>5s}  regular abundant fountain")
    for family in (Family.FULL, Family.UPPER, Family.UNI):
        for n in range(1, args.max_n + 1):
            if family is Family.FULL and n == 4 and not args.large:
                print(f"{family.value:10s} {n:2d}  (skipped, pass --large)")
                continue
            r = classify(FiniteMonoidTable(FamilySpec(family, n), allow_large=args.large))
            f = r.flags
            print(f"{family.value:10s} {n:2d} {r.counts['elements']:6d} {r.counts['idempotents']:5d}"
                  f"  {f['regular']!s:7s} {f['abundant']!s:8s} {f['fountain']!s:8s}", flush=True)


if __name__ == "__main__":
    main()
