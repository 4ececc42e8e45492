import json

import pytest

from colorlist_tools.main import main
from colorlist_tools.graphs import generate
from colorlist_tools.assignments import ListAssignment, IntervalAssignment, KIntervalAssignment, Coloring
from colorlist_tools.importdata import read_graph, read_assignment
from colorlist_tools.export import write_graph, write_assignment
from colorlist_tools.solvers import exists_list_coloring, gamma_mu_coloring

def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

def report_of(out):
    return json.loads(out)

@pytest.fixture
def graph_files(tmp_path):
    paths = {}
    for name, graph in [("c4", generate("cycle", 4)), ("k3", generate("complete", 3)), ("p3", generate("path", 3))]:
        paths[name] = str(tmp_path / f"{name}.graph")
        write_graph(graph, paths[name])
    return paths

def test_generate(tmp_path, capsys):
    """
    Tests the generate command.
    The written file parses back to the family graph.
    """
    out = tmp_path / "c4.graph"
    code, stdout, _ = run(capsys, "generate", "cycle", "4", "--out", str(out))
    assert code == 0
    assert read_graph(out) == generate("cycle", 4)
    assert report_of(stdout)["m"] == 4

def test_generate_random_is_seeded(tmp_path, capsys):
    first, second = tmp_path / "a.graph", tmp_path / "b.graph"
    run(capsys, "generate", "random", "9", "--p", "0.3", "--seed", "4", "--out", str(first))
    run(capsys, "generate", "random", "9", "--p", "0.3", "--seed", "4", "--out", str(second))
    assert first.read_text() == second.read_text()
    code, _, err = run(capsys, "generate", "random_bipartite", "3", "--out", str(first))
    assert code == 2
    assert err.startswith("error:")

def test_solve_gammamu_c4(tmp_path, graph_files, capsys):
    """
    Tests solve gammamu on C4 with intervals {10,11}, {20,21}, {30,31}, {40,41}.
    """
    intervals = tmp_path / "c4.json"
    write_assignment(KIntervalAssignment.from_starts((10, 20, 30, 40), 2), intervals)
    code, stdout, _ = run(capsys, "solve", "gammamu", graph_files["c4"], "--assignment", str(intervals))
    report = report_of(stdout)
    assert code == 0
    assert report["verdict"] == "satisfiable"
    assert report["witness"]["colors"] == {"1": 10, "2": 20, "3": 30, "4": 40}
    assert report["checks"] == []
    assert set(report["inputs"]) == {graph_files["c4"], str(intervals)}

def test_solve_kcolor_k3_unsatisfiable(graph_files, capsys):
    code, stdout, _ = run(capsys, "solve", "kcolor", graph_files["k3"], "--k", "2")
    assert code == 1
    assert report_of(stdout)["verdict"] == "unsatisfiable"

def test_solve_list_p3(tmp_path, graph_files, capsys):
    lists = tmp_path / "lists.json"
    write_assignment(ListAssignment({1: {1, 2}, 2: {1, 3}, 3: {2, 3}}), lists)
    code, stdout, _ = run(capsys, "solve", "list", graph_files["p3"], "--assignment", str(lists), "--human")
    assert code == 0
    assert "satisfiable" in report_of(stdout)["summary"]

def test_solve_precolor(tmp_path, graph_files, capsys):
    precoloring = tmp_path / "pre.json"
    precoloring.write_text('{"kind": "precoloring", "fixed": {"1": 1, "3": 2}, "k": 3}')
    code, stdout, _ = run(capsys, "solve", "precolor", graph_files["c4"], "--assignment", str(precoloring))
    assert code == 0
    assert report_of(stdout)["witness"]["colors"] == {"1": 1, "2": 3, "3": 2, "4": 3}

def test_solve_kind_mismatch(tmp_path, graph_files, capsys):
    lists = tmp_path / "lists.json"
    write_assignment(ListAssignment({1: {1}, 2: {1}, 3: {1}}), lists)
    code, stdout, err = run(capsys, "solve", "gammamu", graph_files["p3"], "--assignment", str(lists))
    assert code == 2
    assert stdout == ""
    assert "expects an assignment of kind 'interval'" in err

def test_missing_file_is_an_error(tmp_path, capsys):
    code, _, err = run(capsys, "chromatic", str(tmp_path / "absent.graph"))
    assert code == 2
    assert err.startswith("error:")

def test_choosable_interval(graph_files, capsys):
    """
    Tests the choosable command on K3: 3-(gamma, mu)-choosable, not 2-(gamma, mu)-choosable.
    """
    code, stdout, _ = run(capsys, "choosable", graph_files["k3"], "--model", "interval", "--k", "3")
    assert code == 0
    assert report_of(stdout)["verdict"] == "choosable"
    code, stdout, _ = run(capsys, "choosable", graph_files["k3"], "--k", "2")
    report = report_of(stdout)
    assert code == 1
    assert report["counterexample"]["gamma"] == {"1": 1, "2": 1, "3": 1}
    assert report["universe"] == "paper_literal"
    assert report["checks"] == []

def test_choosable_classical_fig5(graph_files, capsys):
    code, stdout, _ = run(capsys, "choosable", graph_files["p3"], "--model", "classical", "--k", "2", "--pool", "3")
    report = report_of(stdout)
    assert code == 0
    assert report["stats"]["assignments_checked"] == 27

def test_choosable_emits_counterexample(tmp_path, graph_files, capsys):
    out = tmp_path / "counterexample.json"
    code, _, _ = run(capsys, "choosable", graph_files["k3"], "--model", "k1", "--k", "2", "--pool", "2",
                     "--emit-counterexample", str(out))
    assert code == 1
    assert read_assignment(out) == ListAssignment({1: {1, 2}, 2: {1, 2}, 3: {1, 2}})

def test_choosable_number(graph_files, capsys):
    code, stdout, _ = run(capsys, "choosable", graph_files["k3"], "--number")
    assert code == 0
    assert report_of(stdout)["gamma_mu_choosability_number"] == 3
    code, stdout, _ = run(capsys, "choosable", graph_files["p3"], "--model", "classical", "--number", "--pool", "3")
    assert report_of(stdout)["choice_number"] == 2

def test_choosable_budget_refusal(graph_files, capsys, monkeypatch):
    """
    A run above the budget exits with 2 and names the exact count; --force runs it anyway.
    """
    code, stdout, err = run(capsys, "choosable", graph_files["p3"], "--k", "2", "--budget", "7")
    assert code == 2
    assert stdout == ""
    assert "8 assignments" in err
    monkeypatch.setenv("COLORLIST_BUDGET", "7")
    code, _, err = run(capsys, "choosable", graph_files["p3"], "--k", "2")
    assert code == 2
    with pytest.warns(RuntimeWarning):
        code, _, _ = run(capsys, "choosable", graph_files["p3"], "--k", "2", "--force")
    assert code == 0

def test_choosable_user_config(tmp_path, capsys):
    """
    A --config file overrides the packaged pool_factor and start_k.
    P2 with k = 2 checks C(4, 2)^2 = 36 assignments by default and C(8, 2)^2 = 784 with pool_factor = 2.
    """
    p2, edgeless = tmp_path / "p2.graph", tmp_path / "edgeless.graph"
    write_graph(generate("path", 2), p2)
    write_graph(generate("edgeless", 2), edgeless)
    user_config = tmp_path / "user.toml"
    user_config.write_text("[classical]\npool_factor = 2\n\n[choosability]\nstart_k = 2\n")

    _, stdout, _ = run(capsys, "choosable", str(p2), "--model", "classical", "--k", "2")
    assert report_of(stdout)["stats"]["assignments_checked"] == 36
    _, stdout, _ = run(capsys, "choosable", str(p2), "--model", "classical", "--k", "2", "--config", str(user_config))
    assert report_of(stdout)["stats"]["assignments_checked"] == 784

    _, stdout, _ = run(capsys, "choosable", str(edgeless), "--number")
    assert report_of(stdout)["gamma_mu_choosability_number"] == 1
    _, stdout, _ = run(capsys, "choosable", str(edgeless), "--number", "--config", str(user_config))
    assert report_of(stdout)["gamma_mu_choosability_number"] == 2

def test_solve_rejects_non_integer_list_colors(tmp_path, graph_files, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "list", "lists": {"1": [[1]], "2": [1], "3": [2]}}')
    code, stdout, err = run(capsys, "solve", "list", graph_files["p3"], "--assignment", str(bad))
    assert code == 2
    assert stdout == ""
    assert "must be an integer" in err

def test_choosable_by_lift(graph_files, capsys):
    code, stdout, _ = run(capsys, "choosable", graph_files["c4"], "--k", "2", "--by-lift")
    assert code == 0
    assert report_of(stdout)["stats"]["assignments_checked"] == 81

def test_choosable_workers_match(graph_files, capsys):
    _, sequential, _ = run(capsys, "choosable", graph_files["c4"], "--k", "2", "--workers", "1")
    _, parallel, _ = run(capsys, "choosable", graph_files["c4"], "--k", "2", "--workers", "2")
    for key in ("verdict", "counterexample", "stats"):
        assert report_of(sequential)[key] == report_of(parallel)[key]

def test_reduce_psi_round_trip(tmp_path, graph_files, capsys):
    """
    Tests reduce psi. The written psi(G) files re-parse and re-solve to the verdict of the list instance.
    """
    lists = ListAssignment({1: {1}, 2: {1, 3}, 3: {2}})
    lists_path, out_graph, out_intervals = tmp_path / "lists.json", tmp_path / "psi.graph", tmp_path / "psi.json"
    write_assignment(lists, lists_path)
    code, stdout, _ = run(capsys, "reduce", "psi", graph_files["p3"], str(lists_path),
                          "--out-graph", str(out_graph), "--out-assignment", str(out_intervals), "--solve")
    report = report_of(stdout)
    assert code == 0
    assert report["c_max"] == 3
    assert report["pendants"] == 5
    assert report["pendant_map"] == [
        {"vertex": 1, "color": 2, "pendant": 4},
        {"vertex": 1, "color": 3, "pendant": 5},
        {"vertex": 2, "color": 2, "pendant": 6},
        {"vertex": 3, "color": 1, "pendant": 7},
        {"vertex": 3, "color": 3, "pendant": 8},
    ]
    assert report["witness"]["colors"] == {"1": 1, "2": 3, "3": 2}
    assert report["checks"] == []
    reparsed = gamma_mu_coloring(read_graph(out_graph), read_assignment(out_intervals))
    assert reparsed.satisfiable == exists_list_coloring(generate("path", 3), lists).satisfiable

def test_reduce_lift_c4(tmp_path, graph_files, capsys):
    coloring, intervals = tmp_path / "coloring.json", tmp_path / "intervals.json"
    write_assignment(Coloring.from_sequence([1, 2, 1, 2]), coloring)
    write_assignment(IntervalAssignment({1: 10, 2: 20, 3: 30, 4: 40}, {1: 11, 2: 21, 3: 31, 4: 41}), intervals)
    code, stdout, _ = run(capsys, "reduce", "lift", graph_files["c4"], str(coloring), str(intervals))
    report = report_of(stdout)
    assert code == 0
    assert report["witness"]["colors"] == {"1": 11, "2": 20, "3": 31, "4": 40}
    assert report["candidates_inspected"] == 8

def test_chromatic_and_count(graph_files, capsys):
    code, stdout, _ = run(capsys, "chromatic", graph_files["k3"])
    assert code == 0
    assert report_of(stdout)["chromatic_number"] == 3
    _, stdout, _ = run(capsys, "count", "3", "2")
    assert report_of(stdout)["count"] == 8
    _, stdout, _ = run(capsys, "count", "3", "3")
    assert report_of(stdout)["count"] == 1
    _, stdout, _ = run(capsys, "count", "30", "2")
    assert report_of(stdout)["count"] == 29 ** 30
    code, _, err = run(capsys, "count", "2", "3")
    assert code == 2

def test_survey(tmp_path, capsys):
    out = tmp_path / "survey.csv"
    code, stdout, _ = run(capsys, "survey", "--out", str(out), "--max-n", "2")
    assert code == 0
    assert stdout.strip() == f"Output written to {out}"
    assert len(out.read_text().splitlines()) == 4
