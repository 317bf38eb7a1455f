"""Acceptance criteria, one test each.

Every test records a ``PASS criterion k`` or ``FAIL criterion k`` line; the
lines are printed in the pytest terminal summary.  The wall-clock budget of
each criterion is checked too.
"""

import time

import pytest

from tropgreen.suites import SuiteConfig, run_suite

RESULTS = {}

CRITERIA = [
    (1, "thmB", "Boolean classification table for n <= 3, 41 of 64 idempotents", 10),
    (2, "u4-fountain", "U4(B): one idempotent per tilde class, equal to plus/star", 5),
    (3, "not-fountain", "n = 4 non-Fountain witness, Boolean scan and max-plus replay", 60),
    (4, "idmpt", "plus_of idempotent, left identity and maximal, n = 2..6", 60),
    (5, "idmpgensmgp", "idempotent factorization, n = 2..8", 120),
    (6, "ef-power", "(EF)^m law, n = 3..6", 60),
    (7, "deficiency", "length-2 deficiency reduction", 30),
    (8, "d-class", "D-classes via deficiencies and the non-commuting witness", 30),
    (9, "ht-tables", "tilde-H tables for n = 3 and n = 4", 120),
    (10, "prop-ht", "n = 5 tilde-H non-closure and its n = 6 embedding", 5),
    (11, "leftcong", "tilde-R is not a left congruence; R-pairs stay related", 60),
    (12, "theta", "theta preserves products, plus and star", 30),
    (13, "regularity", "regularity by residuation with verified witnesses", 30),
    (14, "exactness", "Boolean exactness for n <= 3 and R = R* on M3(B)", 60),
]


@pytest.mark.parametrize("k,suite,text,budget", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(k, suite, text, budget):
    t0 = time.perf_counter()
    rep = run_suite(suite, SuiteConfig(seed=0))
    elapsed = time.perf_counter() - t0
    ok = rep.passed and elapsed < budget
    RESULTS[k] = (f"{'PASS' if ok else 'FAIL'} criterion {k}: {text} "
                  f"[{suite}, {len(rep.assertions)} assertions, {elapsed:.1f}s / {budget}s]")
    failed = [a["id"] for a in rep.assertions if not a["passed"]]
    assert rep.passed, f"failed assertions: {failed}; witness: {rep.to_json()['witness']}"
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
