import json

import pytest

from locdom import harness
from locdom.families import FamilySpec, generate_family
from locdom.graph6 import decode_graph6, encode_graph6
from locdom.harness import (
    VerificationReport,
    Violation,
    reports_from_csv,
    reports_from_json,
    reports_to_csv,
    reports_to_json,
)


def _sample_reports():
    return [
        VerificationReport("difuno", "connected graphs, n <= 3", 4, [], 0.125, {"a": 1}),
        VerificationReport(
            "table1",
            "2 listed family members",
            2,
            [Violation("A_", {"quantity": "lambda", "solver": 1}), Violation("Bw", {"note": "x,y \"quoted\""})],
            1.0 / 3.0,
            {},
        ),
    ]


def test_json_round_trip():
    reps = _sample_reports()
    text = reports_to_json(reps)
    assert json.loads(text)["schema"] == 1
    assert reports_from_json(text) == reps
    single = reps[1].to_json()
    assert reports_from_json(single) == [reps[1]]


def test_csv_round_trip_is_lossless():
    reps = _sample_reports()
    assert reports_from_csv(reports_to_csv(reps)) == reps


def test_schema_checked():
    d = _sample_reports()[0].to_dict()
    d["schema"] = 2
    with pytest.raises(ValueError, match="schema"):
        VerificationReport.from_dict(d)


def test_summary_line():
    reps = _sample_reports()
    assert reps[0].summary().startswith("PASS difuno: 4 checked, 0 violations")
    assert reps[1].summary().startswith("FAIL table1: 2 checked, 2 violations")


def test_difuno_on_stream():
    gs = [generate_family(FamilySpec("path", n=n)) for n in range(2, 9)]
    rep = harness.suite_difuno(graphs=gs)
    assert rep.passed and rep.checked == len(gs)
    assert rep.universe == "graph6 stream"


def test_violation_graph6_reproduces_graph(monkeypatch):
    """A failing check must record a graph6 string that decodes to the offending graph."""
    target = generate_family(FamilySpec("wheel", n=9))
    real = harness.closed_form

    def wrong(spec, which):
        value = real(spec, which)
        return value + 1 if spec.kind == "wheel" and which == "lambda" else value

    monkeypatch.setattr(harness, "closed_form", wrong)
    rep = harness.suite_table1(cases=[FamilySpec("path", n=8), FamilySpec("wheel", n=9)])
    assert not rep.passed
    assert len(rep.violations) == 1
    v = rep.violations[0]
    assert decode_graph6(v.graph6) == target
    assert v.graph6 == encode_graph6(target)
    assert v.details["quantity"] == "lambda"


def test_suites_are_deterministic():
    a = harness.suite_cactus(samples=50, seed=3)
    b = harness.suite_cactus(samples=50, seed=3)
    assert a.stats == b.stats and a.checked == b.checked == 50


def test_small_suites_pass():
    for rep in (
        harness.suite_teoremon(n_max=5),
        harness.suite_global_symmetry(n_max=5),
        harness.suite_bipartite_gap(n_max=7),
        harness.suite_assoc_properties(n_max=5, samples_per_graph=10, constructions=((3, 6),)),
        harness.suite_constructions(cases=[(3, 6)], bistar_max=4),
    ):
        assert rep.passed, rep.violations[:3]
        assert rep.checked > 0
