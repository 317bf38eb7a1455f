"""Replay the fixed counterexamples and print their certificates as JSON.

Covers the non-Fountain 4x4 matrix, the non-commuting plus/star pair, the
n = 5 tilde-H non-closure and the non-regular 3x3 unitriangular matrix.
"""

import argparse
import json
from fractions import Fraction

from tropgreen.certificates import to_jsonable
from tropgreen.deficiency import ht_nonclosure_witness, rtilde_noncommute_witness
from tropgreen.finite_green import check_not_fountain_witness
from tropgreen.matrix import Matrix
from tropgreen.plusstar import is_regular
from tropgreen.semiring import ZERO, Kind


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--g", default="1", help="positive scalar for the parametrised witnesses")
    args = ap.parse_args()
    g = Fraction(args.g)
    out = {
        "not_fountain_bool": check_not_fountain_witness(4, Kind.BOOLEAN).to_json(),
        "not_fountain_maxplus": check_not_fountain_witness(4, Kind.MAXPLUS).to_json(),
        "plus_star_not_D_related": rtilde_noncommute_witness(4, g).to_json(),
        "ht_not_closed_n5": ht_nonclosure_witness(5, g).to_json(),
        "ht_not_closed_n6": ht_nonclosure_witness(6, g).to_json(),
    }
    G = Matrix([[0, g, g], [ZERO, 0, g], [ZERO, ZERO, 0]])
    out["all_g_regular"] = is_regular(G).regular
    print(json.dumps(to_jsonable(out), indent=2))


if __name__ == "__main__":
    main()
