"""Acceptance gate: every criterion is checked exactly, at five seeded points per parametric claim.

Criteria 5, 6, 8 and 10 are expected to fail: several published closed forms
disagree with the exact computation.  They are left failing rather than
relaxed; the per-claim detail strings say what differs.
"""

import time

import pytest

from nilkahler.reproduce import criterion_verdicts, run_all

CRITERIA = {
    1: "catalog validity and basis changes",
    2: "calculus identities",
    3: "g1 semi-Kahler conditions",
    4: "Hitchin operator on g1 and g2",
    5: "g1 para geometry",
    6: "g1 complex geometry",
    7: "g2 results",
    8: "g3 results",
    9: "oracle equivalence",
    10: "Ricci convention calibration",
}


@pytest.mark.parametrize("crit", sorted(CRITERIA), ids=lambda c: f"criterion_{c}")
def test_criterion(results, crit):
    claims = [r for r in results if r.criterion == crit]
    assert claims, f"no claims registered for criterion {crit}"
    verdict = all(r.passed for r in claims)
    print(f"criterion {crit} ({CRITERIA[crit]}): {'PASS' if verdict else 'FAIL'}")
    for r in claims:
        print(f"    {r.claim}: {'pass' if r.passed else 'FAIL'} {r.detail}")
    assert verdict, "; ".join(f"{r.claim}: {r.detail}" for r in claims if not r.passed)


def test_supplementary_claims_hold(results):
    extra = [r for r in results if r.criterion is None]
    assert extra
    assert all(r.passed for r in extra), [r.claim for r in extra if not r.passed]


def test_verdict_table_covers_all_criteria(results):
    assert set(criterion_verdicts(results)) == set(CRITERIA)


def test_runtime_budget():
    start = time.perf_counter()
    run_all(seed=11, samples=5)
    elapsed = time.perf_counter() - start
    print(f"full verification run: {elapsed:.2f}s")
    assert elapsed < 10
