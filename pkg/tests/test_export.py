import json

from colorlist_tools.graphs import generate
from colorlist_tools.assignments import Coloring, ListAssignment, KIntervalAssignment
from colorlist_tools.solvers import k_coloring
from colorlist_tools.choosability import is_k_gamma_mu_choosable
from colorlist_tools.export import (
    assignment_document, solve_result_fields, verdict_fields, build_run_report, report_to_json, survey_graphs, survey_to_csv
)

def test_assignment_document_uses_string_ids():
    """
    Tests assignment_document.
    Vertex ids become decimal strings, lists are sorted and k-intervals serialize as plain intervals.
    """
    assert assignment_document(ListAssignment({2: {3, 1}})) == {"kind": "list", "lists": {"2": [1, 3]}}
    assert assignment_document(KIntervalAssignment.from_starts((1, 2), 2)) == {
        "kind": "interval", "gamma": {"1": 1, "2": 2}, "mu": {"1": 2, "2": 3}
    }
    assert assignment_document(Coloring({1: 11})) == {"kind": "coloring", "colors": {"1": 11}}

def test_solve_result_fields():
    fields = solve_result_fields(k_coloring(generate("complete", 3), 2))
    assert fields["verdict"] == "unsatisfiable"
    assert fields["witness"] is None
    fields = solve_result_fields(k_coloring(generate("cycle", 4), 2))
    assert fields["witness"]["colors"] == {"1": 1, "2": 2, "3": 1, "4": 2}

def test_verdict_fields_and_report():
    """
    Tests build_run_report with a choosability verdict.
    The report is a single JSON document with the counterexample and its index.
    """
    verdict = is_k_gamma_mu_choosable(generate("complete", 3), 2)
    fields = verdict_fields(verdict)
    assert fields["verdict"] == "not_choosable"
    assert fields["counterexample"]["gamma"] == {"1": 1, "2": 1, "3": 1}
    assert fields["stats"]["assignments_checked"] == 1
    report = build_run_report(["colorlist", "choosable"], {"k3.graph": "abc"}, fields, 0.5, [], "K3 is not 2-choosable")
    parsed = json.loads(report_to_json(report))
    assert parsed["command"] == ["colorlist", "choosable"]
    assert parsed["inputs"] == {"k3.graph": "abc"}
    assert parsed["checks"] == []
    assert parsed["summary"] == "K3 is not 2-choosable"
    assert "summary" not in build_run_report([], {}, fields, 0.0)

def test_survey_table(tmp_path):
    """
    Tests survey_graphs on every graph with at most 3 vertices (1 + 2 + 4 graphs).
    """
    survey = survey_graphs(max_n=3)
    assert len(survey) == 7
    assert list(survey.columns) == ["atlas_index", "n", "m", "chromatic_number", "gamma_mu_choosability_number", "agree"]
    assert survey["agree"].all()
    assert survey["chromatic_number"].max() == 3
    out = tmp_path / "survey.csv"
    survey_to_csv(survey, out)
    assert out.read_text().splitlines()[0] == "atlas_index,n,m,chromatic_number,gamma_mu_choosability_number,agree"
