from __future__ import annotations

import pytest

from mvinterlace import checks
from mvinterlace.checks import GRAPH_CHECKS, LITERAL_SUITES, CheckResult, Scope

SMALL = Scope(max_n=3, n_random=6, random_n=(4, 5), seed=1)


def test_check_result_needs_cases():
    r = CheckResult("empty")
    assert not r.passed
    r.expect(True, "never shown")
    assert r.passed and r.line() == "PASS empty: 1 cases, 0 failures"
    r.expect(False, lambda: "boom")
    assert not r.passed and "failed: boom" in r.report()


@pytest.mark.parametrize("name", [n for n in GRAPH_CHECKS if n not in LITERAL_SUITES])
def test_graph_check_small_scope(name):
    (r,) = checks.run_graph_checks([name], SMALL)
    assert r.passed, r.report()


def test_rank_suites_small():
    assert checks.suite_lemma1(SMALL, n_random=40, random_max_n=7).passed
    assert checks.suite_lemma2(SMALL, n_random=40, random_max_n=7).passed


def test_literal_forms_fail():
    scope = Scope(max_n=3, n_random=0)
    assert not checks.suite_lemma1(scope, n_random=0, literal=True).passed
    assert not checks.suite_lemma2(scope, n_random=0, literal=True).passed
    (r,) = checks.run_graph_checks(["cor10_literal"], scope)
    assert not r.passed


def test_counterexample_details():
    ce = checks.counterexample14()
    assert not ce["holds"] and ce["holds_u0"] and ce["holds_y0"]
    assert ce["lhs_witness"] == ["x_d*y_b*y_c*u^3"]
    assert ce["rhs_witness"] == ["x_d*y_b*y_c*u^2*v"]


def test_cwdp_and_matroid_suites_small():
    assert checks.suite_cwdp(SMALL, n_cases=20, max_constants=8).passed
    assert checks.suite_matroid(Scope(max_n=3), n_random=5, n_families=30).passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        checks.run_suite("nope")
