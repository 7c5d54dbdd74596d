import json

import pytest

from yangian.algebra import Yangian, parse_element, set_term_cap
from yangian.series import Series
from yangian.verify import (
    CaseRecord,
    SuiteReport,
    SuiteSpec,
    UnknownSuite,
    UnsupportedParameters,
    list_cases,
    render_report,
    run_suite,
    suite_names,
)
from yangian.verify.core import SUITES, Case, matches, residual_text, suite

Y2 = Yangian(2)


@pytest.fixture
def toy_suite():
    """A throwaway suite with one true and one false identity."""

    @suite("toy", "test-only suite", max_n=2)
    def toy(spec):
        x = parse_element("T[2,1;1]*T[1,2;1]", Y2)
        good = parse_element("T[1,2;1]*T[2,1;1] + T[2,2;1] - T[1,1;1]", Y2)
        # wrong sign on the bracket
        bad = parse_element("T[1,2;1]*T[2,1;1] - T[2,2;1] + T[1,1;1]", Y2)
        yield Case("swap:good", "(toy)", lambda: x - good)
        yield Case("swap:bad", "(toy)", lambda: x - bad)

    yield "toy"
    del SUITES["toy"]


def test_catalog_names():
    names = suite_names()
    assert names[:3] == ["rtt", "levi", "drinfeld"]
    for name in ("drinfeld-lemmas", "parabolic-lemmas", "root-vectors", "automorphisms", "hopf",
                 "psi", "kappa", "center", "qdet", "sl", "pbw-independence"):
        assert name in names


def test_matches():
    cid = "pr9:nu=2.1,a=1,i=1,j=1,h=1,k=1,r=1,s=1"
    assert matches(cid, None)
    assert matches(cid, "pr9")
    assert not matches(cid, "pr1")
    assert matches(cid, "pr1, pr9")
    assert matches(cid, "pr*")
    assert matches(cid, "*nu=2.1*")
    assert not matches(cid, "pr9:nu=1.2*")


def test_residual_text():
    assert residual_text(None) is None
    assert residual_text(True) is None
    assert residual_text(0) is None
    assert residual_text(Y2.zero()) is None
    assert residual_text(False) == "check returned false"
    assert residual_text("rank 3 < 4") == "rank 3 < 4"
    # unnormalized input is reduced first
    x = parse_element("T[2,1;1]*T[1,2;1] - T[1,2;1]*T[2,1;1]", Y2)
    assert residual_text(x) == "T[2,2;1] - T[1,1;1]"
    s = Series(Y2, [Y2.zero(), Y2.zero(), Y2.T(1, 1, 1)])
    assert residual_text(s) == "[u^-2] T[1,1;1]"
    assert residual_text(("left", Y2.T(1, 2, 1))) == "[left] T[1,2;1]"
    assert residual_text([Y2.zero(), Y2.T(1, 2, 1)]) == "T[1,2;1]"


def test_failing_case_reports_residual(toy_suite):
    report = run_suite(SuiteSpec(toy_suite, n=2))
    assert [c.status for c in report.cases] == ["pass", "fail"]
    assert report.cases[1].residual == "2*T[2,2;1] - 2*T[1,1;1]"
    text = render_report(report)
    assert "FAIL swap:bad" in text
    assert "residual: 2*T[2,2;1] - 2*T[1,1;1]" in text
    assert text.splitlines()[-1] == "FAIL 1/2 (1 failed)"
    assert not report.ok


def test_pass_summary_line():
    report = SuiteReport("x", {}, 1, [CaseRecord(f"c{k}", "", "pass", None, 0.0) for k in range(124)])
    assert render_report(report).splitlines()[-1] == "PASS 124/124"


def test_empty_json():
    doc = json.loads(render_report(SuiteReport("x", {"n": 2}, 7), "json"))
    assert doc == {"suite": "x", "params": {"n": 2}, "cases": [], "passed": 0, "failed": 0,
                   "elapsed_ms": 0, "seed": 7}


def test_json_is_deterministic():
    spec = SuiteSpec("automorphisms", n=2, cutoff=3, seed=5)
    a = render_report(run_suite(spec), "json")
    b = render_report(run_suite(spec), "json")
    assert a == b
    doc = json.loads(a)
    assert set(doc["cases"][0]) == {"id", "paper_ref", "status", "residual", "ms"}
    assert doc["failed"] == 0


def test_seed_changes_random_cases():
    ids = lambda seed: [c[0] for c in list_cases(SuiteSpec("automorphisms", n=2, cutoff=3, seed=seed))]
    assert ids(1) == ids(1)
    assert ids(1) != ids(2)


def test_list_cases_examples():
    drin = [c[0] for c in list_cases(SuiteSpec("drinfeld", n=2, cutoff=3))]
    assert "r3:i=1,j=1,r=2,s=1" in drin
    hopf = [c[0] for c in list_cases(SuiteSpec("hopf", n=2, cutoff=3))]
    assert "coassoc:T[1,2;2]" in hopf
    only = list_cases(SuiteSpec("parabolic", n=3, cutoff=3, only="pr9"))
    assert only and all(c[0].startswith("pr9:") for c in only)
    assert all(c[1] == "(pr9)" for c in only)


def test_parabolic_n1_has_no_e_or_f_cases():
    report = run_suite(SuiteSpec("parabolic", n=1, nu=(1,), cutoff=3))
    assert report.ok
    assert {c.id.split(":")[0] for c in report.cases} <= {"pr1", "pr2", "pr3"}


def test_parameter_errors():
    with pytest.raises(UnknownSuite):
        run_suite(SuiteSpec("nope"))
    with pytest.raises(UnsupportedParameters):
        run_suite(SuiteSpec("parabolic", n=3, nu=(2, 2)))
    with pytest.raises(UnsupportedParameters):
        run_suite(SuiteSpec("rtt", n=2, cutoff=0))
    with pytest.raises(UnsupportedParameters):
        run_suite(SuiteSpec("drinfeld", n=9))
    with pytest.raises(UnsupportedParameters):
        run_suite(SuiteSpec("drinfeld-lemmas", n=2, cutoff=4, bound=5))


def test_term_cap_becomes_a_failed_case():
    old = set_term_cap(3)
    Y2.clear_cache()
    try:
        report = run_suite(SuiteSpec("rtt", n=2, cutoff=4, only="mr*"))
    finally:
        set_term_cap(old)
        Y2.clear_cache()
    errors = [c for c in report.cases if c.residual and c.residual.startswith("error:")]
    assert errors and all(c.status == "fail" for c in errors)


@pytest.mark.parametrize("name,n,cutoff", [("rtt", 2, 4), ("drinfeld", 2, 4), ("levi", 2, 3),
                                          ("qdet", 2, 3), ("center", 2, 4), ("sl", 2, 3)])
def test_small_suites_pass(name, n, cutoff):
    report = run_suite(SuiteSpec(name, n=n, cutoff=cutoff))
    assert report.cases
    assert report.ok, render_report(report)
