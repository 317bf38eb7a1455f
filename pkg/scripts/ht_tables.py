"""Tilde-H classes of unitriangular idempotents for n = 3 and n = 4.

For each closed tightness pattern: build an idempotent, print its case and
constraint, and report membership and closure counts on sampled matrices.
"""

import argparse
import random

from tropgreen.deficiency import (
    ht_class_descriptor, ht_closure_check, ht_membership, pattern_idempotent, realizable_patterns,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for n in (3, 4):
        for pat in realizable_patterns(n):
            E = pattern_idempotent(pat, rng)
            d = ht_class_descriptor(E)
            mem = sum(ht_membership(E, d.sample_member(rng), d) for _ in range(args.samples))
            non = sum(not ht_membership(E, d.sample_nonmember(rng), d) for _ in range(args.samples))
            clo = ht_closure_check(E, args.samples, seed=rng.randrange(1 << 30))
            print(f"n={n} tight={str(pat):16s} {d.case_id:14s} {d.form.value:9s} "
                  f"members {mem}/{args.samples} rejected {non}/{args.samples} "
                  f"closed={clo.closed} law={clo.product_law}  [{d.constraint}]")


if __name__ == "__main__":
    main()
