"""The seven acceptance criteria, each driven through the verify matrix.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""
import time

import pytest

from adoforge.cli import run_verify

TITLES = {
    1: "ADO_3 triple agreement, s = 1..8",
    2: "ADO_4 triple agreement and worked examples T(2,15)..T(2,21)",
    3: "ADO_4 golden polynomials T(2,23)..T(2,39)",
    4: "R-matrix N-hat and num[N] fixtures",
    5: "refined Alexander / refined ADO_3 suite",
    6: "property suites",
    7: "robustness under doubled truncations",
}


@pytest.fixture(scope="module")
def report():
    t0 = time.perf_counter()
    rep = run_verify("all", jobs=1)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _check(report, n, record):
    cases = report.by_criterion().get(n, [])
    assert cases, f"no verify cases registered for criterion {n}"
    bad = [c for c in cases if c.status in ("mismatch", "inconclusive")]
    secs = sum(c.seconds for c in cases)
    detail = f"{TITLES[n]}: {len(cases) - len(bad)}/{len(cases)} cases agree ({secs:.1f}s)"
    if bad:
        detail += "; failing: " + ", ".join(f"{c.key} -> {c.outcome}" for c in bad)
    record(n, not bad, detail)
    assert not bad, detail


def test_criterion_1_ado3_triple_agreement(report, acceptance_record):
    _check(report, 1, acceptance_record)


def test_criterion_2_ado4_triple_agreement(report, acceptance_record):
    _check(report, 2, acceptance_record)


def test_criterion_3_ado4_golden_suite(report, acceptance_record):
    _check(report, 3, acceptance_record)


def test_criterion_4_rmatrix_fixtures(report, acceptance_record):
    _check(report, 4, acceptance_record)


def test_criterion_5_refined_suite(report, acceptance_record):
    _check(report, 5, acceptance_record)


def test_criterion_6_property_suites(report, acceptance_record):
    _check(report, 6, acceptance_record)


def test_criterion_7_truncation_robustness(report, acceptance_record):
    _check(report, 7, acceptance_record)
