from colorlist_tools.graphs import generate
from colorlist_tools.assignments import Coloring, ListAssignment, KIntervalAssignment, uniform_lists
from colorlist_tools.solvers import SolveResult, exists_list_coloring
from colorlist_tools.choosability import ChoosabilityVerdict, is_k_gamma_mu_choosable, is_k_choosable
from colorlist_tools.qualitycontrol import check_solve_result, check_choosability_verdict

def test_check_solve_result_accepts_solver_output():
    """
    Tests check_solve_result.
    Real solver output passes with no problems.
    """
    c4 = generate("cycle", 4)
    lists = uniform_lists(c4.vertices, [1, 2])
    assert check_solve_result(c4, lists, exists_list_coloring(c4, lists)) == []
    k3 = generate("complete", 3)
    lists = uniform_lists(k3.vertices, [1, 2])
    assert check_solve_result(k3, lists, exists_list_coloring(k3, lists)) == []

def test_check_solve_result_flags_bad_witnesses():
    p2 = generate("path", 2)
    lists = ListAssignment({1: {1}, 2: {1, 2}})
    problems = check_solve_result(p2, lists, SolveResult(True, Coloring({1: 1, 2: 1})))
    assert problems == ["Witness is not proper; equally colored edges: [(1, 2)]"]
    problems = check_solve_result(p2, lists, SolveResult(True, Coloring({1: 2, 2: 1})))
    assert problems == ["Witness leaves the lists at vertices [1]"]
    assert check_solve_result(p2, lists, SolveResult(True)) == ["Satisfiable result has no witness"]
    problems = check_solve_result(p2, lists, SolveResult(True, Coloring({1: 1})))
    assert len(problems) == 1
    assert problems[0].startswith("Witness is not total")

def test_check_choosability_verdict():
    """
    Tests check_choosability_verdict.
    Real counterexamples pass; colorable or wrongly sized ones are flagged.
    """
    k3 = generate("complete", 3)
    assert check_choosability_verdict(k3, is_k_gamma_mu_choosable(k3, 2)) == []
    assert check_choosability_verdict(k3, is_k_choosable(k3, 2, pool=2)) == []
    assert check_choosability_verdict(k3, is_k_gamma_mu_choosable(k3, 3)) == []

    colorable = ChoosabilityVerdict(False, KIntervalAssignment.from_starts((1, 3, 5), 2), 1, 2, 0)
    assert check_choosability_verdict(k3, colorable) == ["Counterexample admits a proper list coloring"]
    wrong_size = ChoosabilityVerdict(False, ListAssignment({1: {1}, 2: {1}, 3: {1}}), 1, 2, 0)
    assert check_choosability_verdict(k3, wrong_size) == ["Counterexample lists at vertices [1, 2, 3] do not have size 2"]
    missing = ChoosabilityVerdict(False, None, 1, 2)
    assert check_choosability_verdict(k3, missing) == ["Verdict is not choosable but has no counterexample"]
