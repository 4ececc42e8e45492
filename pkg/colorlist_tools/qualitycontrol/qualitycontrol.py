from colorlist_tools.graphs import Graph
from colorlist_tools.assignments import (
  AssignmentError, ListAssignment, KIntervalAssignment, IntervalAssignment, interval_to_list,
  is_proper_coloring, respects_lists
)
from colorlist_tools.solvers import SolveResult, exists_list_coloring
from colorlist_tools.choosability import ChoosabilityVerdict

def check_solve_result(graph:Graph, lists:ListAssignment, result:SolveResult) -> list[str]:
  """
  Re-verifies a SolveResult against its instance. A satisfiable result must carry a witness that is total,
  proper and inside every list.

  :param graph: The graph that was solved.
  :type graph: Graph

  :param lists: The list assignment the solver saw.
  :type lists: ListAssignment

  :param result: The solver's answer.
  :type result: SolveResult

  :return: A list of problem descriptions, empty when the result checks out.
  """
  problems = []
  if not result.satisfiable:
    if result.witness is not None:
      problems.append("Unsatisfiable result carries a witness")
    return problems
  if result.witness is None:
    return ["Satisfiable result has no witness"]
  try:
    if not is_proper_coloring(graph, result.witness):
      clashes = [(u, v) for u, v in graph.sorted_edges() if result.witness[u] == result.witness[v]]
      problems.append(f"Witness is not proper; equally colored edges: {clashes}")
    if not respects_lists(result.witness, lists):
      outside = [v for v in graph.vertices if result.witness[v] not in lists[v]]
      problems.append(f"Witness leaves the lists at vertices {outside}")
  except AssignmentError as error:
    problems.append(f"Witness is not total on V(G): {error}")
  return problems

def check_choosability_verdict(graph:Graph, verdict:ChoosabilityVerdict) -> list[str]:
  """
  Re-verifies a choosability verdict. A counterexample must have the advertised size on every vertex
  and must admit no proper list coloring.
  """
  if verdict.choosable:
    return ["Choosable verdict carries a counterexample"] if verdict.counterexample is not None else []
  counterexample = verdict.counterexample
  if counterexample is None:
    return ["Verdict is not choosable but has no counterexample"]

  problems = []
  if isinstance(counterexample, IntervalAssignment):
    if isinstance(counterexample, KIntervalAssignment) and counterexample.k != verdict.k:
      problems.append(f"Counterexample intervals have length {counterexample.k}, verdict is for k = {verdict.k}")
    wrong = [v for v in counterexample.vertices if counterexample.length(v) != verdict.k]
    if wrong:
      problems.append(f"Counterexample intervals at vertices {wrong} do not have length {verdict.k}")
    lists = interval_to_list(counterexample)
  else:
    lists = counterexample
    wrong = [v for v, colors in lists.lists.items() if len(colors) != verdict.k]
    if wrong:
      problems.append(f"Counterexample lists at vertices {wrong} do not have size {verdict.k}")
  try:
    if exists_list_coloring(graph, lists).satisfiable:
      problems.append("Counterexample admits a proper list coloring")
  except AssignmentError as error:
    problems.append(f"Counterexample is not total on V(G): {error}")
  return problems
