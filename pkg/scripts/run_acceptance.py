"""Run every verification suite and print one PASS/FAIL line per suite.

    python3 scripts/run_acceptance.py [--seed N]
"""

import argparse
import sys

from tropgreen.suites import SUITES, SuiteConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    ok = True
    for k, name in enumerate(SUITES, 1):
        rep = run_suite(name, SuiteConfig(seed=args.seed))
        ok &= rep.passed
        print(f"{'PASS' if rep.passed else 'FAIL'} {k:2d} {name:12s} "
              f"{len(rep.assertions):3d} assertions  {rep.elapsed:6.1f}s", flush=True)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
