import sys
import time
import hashlib
import argparse
from pathlib import Path

from colorlist_tools.graphs import GraphError, generate, random_graph, random_bipartite_graph
from colorlist_tools.assignments import (
  AssignmentError, Coloring, ListAssignment, IntervalAssignment,
  interval_to_list, mu_to_list, uniform_lists
)
from colorlist_tools.solvers import (
  SolveResult, exists_list_coloring, mu_coloring, gamma_mu_coloring, precoloring_extension, k_coloring,
  chromatic_number
)
from colorlist_tools.reductions import ReductionError, psi_transform, solve_psi, restrict_witness, modular_lift
from colorlist_tools.choosability import (
  is_k_gamma_mu_choosable, is_k_gamma_mu_choosable_by_lift, gamma_mu_choosability_number,
  is_k_choosable, is_k1_choosable, choice_number, assignment_count
)
from colorlist_tools.importdata import read_graph, read_assignment
from colorlist_tools.export import (
  write_graph, write_assignment, assignment_document, solve_result_fields, verdict_fields,
  pendant_map_records, build_run_report, report_to_json, survey_graphs, survey_to_csv
)
from colorlist_tools.qualitycontrol import check_solve_result, check_choosability_verdict
from colorlist_tools.datamappers import mappings
from colorlist_tools.tools import BudgetExceededError, load_config, get_budget, positive_int

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

def file_digest(path:str|Path) -> str:
  with open(path, "rb") as file:
    return hashlib.sha256(file.read()).hexdigest()

def _digests(*paths) -> dict:
  return {str(path): file_digest(path) for path in paths if path is not None}

def _assignment_kind(assignment) -> str:
  return assignment_document(assignment)["kind"]

def build_parser() -> argparse.ArgumentParser:
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument("--config", help="Path to a user config file overriding the packaged config.toml", type=str, default=None)
  common.add_argument("--budget", help="Maximum number of assignments to enumerate (overrides config and COLORLIST_BUDGET)", type=positive_int, default=None)
  common.add_argument("--human", help="Add a prose summary to the report", action="store_true")

  parser = argparse.ArgumentParser(prog="colorlist", description="List coloring, (gamma, mu)-coloring and choosability experiments. Defaults live in config.toml.")
  commands = parser.add_subparsers(dest="command", required=True)

  families = list(mappings.graph_families) + ["random", "random_bipartite"]
  gen = commands.add_parser("generate", parents=[common], help="Write a graph from a standard family")
  gen.add_argument("family", choices=families)
  gen.add_argument("params", type=int, nargs="+", help="Family sizes")
  gen.add_argument("--out", help="Path to the output graph file", type=str, required=True)
  gen.add_argument("--p", help="Edge probability for random families", type=float, default=0.5)
  gen.add_argument("--seed", help="Seed for random families", type=int, default=0)

  solve = commands.add_parser("solve", parents=[common], help="Solve one coloring instance")
  solve.add_argument("model", choices=list(mappings.model_assignment_kinds))
  solve.add_argument("graph", help="Path to the graph file", type=str)
  solve.add_argument("--assignment", help="Path to the assignment document", type=str)
  solve.add_argument("--k", help="Number of colors for kcolor", type=positive_int)
  solve.add_argument("--solver", choices=list(mappings.solver_modes), default=None)

  choose = commands.add_parser("choosable", parents=[common], help="Decide choosability or compute a choosability number")
  choose.add_argument("graph", help="Path to the graph file", type=str)
  choose.add_argument("--model", choices=["interval", "classical", "k1"], default="interval")
  choose.add_argument("--k", help="List size or interval length", type=positive_int)
  choose.add_argument("--pool", help="Color pool for classical and k1 models. Default: pool_factor * n * k", type=positive_int)
  choose.add_argument("--universe", choices=list(mappings.universe_modes), default=None)
  choose.add_argument("--solver", choices=list(mappings.solver_modes), default=None)
  choose.add_argument("--force", help="Run even when the budget is exceeded", action="store_true")
  choose.add_argument("--workers", help="Worker processes for enumeration", type=positive_int, default=None)
  choose.add_argument("--number", help="Compute the smallest choosable k instead of testing --k", action="store_true")
  choose.add_argument("--strict-paper", help="Start the interval number search at k = 2", action="store_true")
  choose.add_argument("--by-lift", help="Certify interval choosability by lifting a k-coloring", action="store_true")
  choose.add_argument("--emit-counterexample", help="Write the counterexample assignment to this path", type=str)

  reduce = commands.add_parser("reduce", help="Run a reduction")
  reduce_commands = reduce.add_subparsers(dest="reduction", required=True)
  psi = reduce_commands.add_parser("psi", parents=[common], help="Pendant-vertex reduction from list coloring to (gamma, mu)-coloring")
  psi.add_argument("graph", type=str)
  psi.add_argument("assignment", help="A list assignment document", type=str)
  psi.add_argument("--out-graph", type=str, required=True)
  psi.add_argument("--out-assignment", type=str, required=True)
  psi.add_argument("--solve", help="Also solve psi(G) and restrict the witness", action="store_true")
  lift = reduce_commands.add_parser("lift", parents=[common], help="Lift a k-coloring into k-intervals")
  lift.add_argument("graph", type=str)
  lift.add_argument("coloring", help="A coloring document with colors in 1..k", type=str)
  lift.add_argument("assignment", help="An interval document with every interval of length k", type=str)
  lift.add_argument("--k", type=positive_int, default=None)

  chromatic = commands.add_parser("chromatic", parents=[common], help="Chromatic number")
  chromatic.add_argument("graph", type=str)

  count = commands.add_parser("count", parents=[common], help="Exact number of k-interval assignments, (n-k+1)^n")
  count.add_argument("n", type=positive_int)
  count.add_argument("k", type=positive_int)

  survey = commands.add_parser("survey", parents=[common], help="Tabulate chromatic and (gamma, mu)-choosability numbers over the graph atlas")
  survey.add_argument("--out", help="Path to the output csv", type=str, required=True)
  survey.add_argument("--max-n", type=positive_int, default=None)
  return parser

# Commands

def cmd_generate(args, config) -> tuple[int, dict]:
  random_arity = {"random": 1, "random_bipartite": 2}
  if args.family in random_arity and len(args.params) != random_arity[args.family]:
    raise GraphError(f"Family '{args.family}' takes {random_arity[args.family]} size parameter(s), got {len(args.params)}")
  match args.family:
    case "random":
      graph = random_graph(*args.params, args.p, args.seed)
    case "random_bipartite":
      graph = random_bipartite_graph(*args.params, args.p, args.seed)
    case _:
      graph = generate(args.family, *args.params)
  write_graph(graph, args.out)
  fields = {"output": args.out, "n": graph.n, "m": graph.m}
  return EXIT_OK, {"fields": fields, "digests": _digests(args.out), "summary": f"Wrote {args.family} graph with n={graph.n}, m={graph.m} to {args.out}"}

def cmd_solve(args, config) -> tuple[int, dict]:
  graph = read_graph(args.graph)
  solver = args.solver or config.get("choosability", "solver", fallback="pruned")
  expected = mappings.model_assignment_kinds[args.model]
  assignment = None
  if expected is not None:
    if args.assignment is None:
      raise AssignmentError(f"Model '{args.model}' needs --assignment with kind '{expected}'")
    assignment = read_assignment(args.assignment)
    if _assignment_kind(assignment) != expected:
      raise AssignmentError(f"Model '{args.model}' expects an assignment of kind '{expected}', got '{_assignment_kind(assignment)}'")

  match args.model:
    case "list":
      lists = assignment
      result = exists_list_coloring(graph, lists, solver)
    case "mu":
      lists = mu_to_list(assignment)
      result = mu_coloring(graph, assignment, solver)
    case "gammamu":
      lists = interval_to_list(assignment)
      result = gamma_mu_coloring(graph, assignment, solver)
    case "precolor":
      palette = range(1, assignment.k + 1)
      lists = ListAssignment({v: frozenset([assignment.fixed[v]]) if v in assignment.fixed else frozenset(palette) for v in graph.vertices})
      result = precoloring_extension(graph, assignment, solver)
    case "kcolor":
      if args.k is None:
        raise ValueError("Model 'kcolor' needs --k")
      lists = uniform_lists(graph.vertices, range(1, args.k + 1))
      result = k_coloring(graph, args.k, solver)

  fields = {"model": args.model}
  fields.update(solve_result_fields(result))
  code = EXIT_OK if result.satisfiable else EXIT_NEGATIVE
  return code, {
    "fields": fields,
    "digests": _digests(args.graph, args.assignment),
    "checks": check_solve_result(graph, lists, result),
    "summary": f"{args.model} instance is {fields['verdict']} ({result.stats.nodes} nodes, {result.stats.leaves} leaves)",
  }

def cmd_choosable(args, config) -> tuple[int, dict]:
  graph = read_graph(args.graph)
  budget = get_budget(config, args.budget)
  universe = args.universe or config.get("choosability", "universe", fallback="paper_literal")
  solver = args.solver or config.get("choosability", "solver", fallback="pruned")
  workers = args.workers or config.getint("choosability", "workers", fallback=1)
  digests = _digests(args.graph)

  if args.number:
    if args.model == "interval":
      number = gamma_mu_choosability_number(graph, universe, solver, args.strict_paper, budget, args.force, workers, config)
      name = "gamma_mu_choosability_number"
    elif args.model == "classical":
      number = choice_number(graph, args.pool, budget, args.force, workers, config)
      name = "choice_number"
    else:
      raise ValueError("--number supports the interval and classical models")
    return EXIT_OK, {"fields": {"model": args.model, name: number}, "digests": digests, "summary": f"{name.replace('_', ' ')} = {number}"}

  if args.k is None:
    raise ValueError("choosable needs --k unless --number is given")
  if args.model == "interval":
    if args.by_lift:
      verdict = is_k_gamma_mu_choosable_by_lift(graph, args.k, budget=budget, force=args.force, workers=workers, config=config)
    else:
      verdict = is_k_gamma_mu_choosable(graph, args.k, universe, solver, budget, args.force, workers, config)
  elif args.model == "classical":
    verdict = is_k_choosable(graph, args.k, args.pool, solver, budget, args.force, workers, config)
  else:
    verdict = is_k1_choosable(graph, args.k, args.pool, solver, budget, args.force, workers, config)

  if args.emit_counterexample and verdict.counterexample is not None:
    write_assignment(verdict.counterexample, args.emit_counterexample)
  fields = {"model": args.model}
  if args.model == "interval" and not args.by_lift:
    fields["universe"] = universe
  fields.update(verdict_fields(verdict))
  code = EXIT_OK if verdict.choosable else EXIT_NEGATIVE
  return code, {
    "fields": fields,
    "digests": digests,
    "checks": check_choosability_verdict(graph, verdict),
    "summary": f"Graph is {'' if verdict.choosable else 'not '}{args.k}-choosable under the {args.model} model after {verdict.assignments_checked} assignments",
  }

def cmd_reduce(args, config) -> tuple[int, dict]:
  graph = read_graph(args.graph)
  if args.reduction == "psi":
    lists = read_assignment(args.assignment)
    if not isinstance(lists, ListAssignment):
      raise AssignmentError(f"psi needs an assignment of kind 'list', got '{_assignment_kind(lists)}'")
    result = psi_transform(graph, lists)
    write_graph(result.graph, args.out_graph)
    fields = {"reduction": "psi", "n": result.graph.n, "m": result.graph.m, "pendants": len(result.pendant_map),
              "c_max": result.c_max, "unsatisfiable": result.unsatisfiable, "pendant_map": pendant_map_records(result)}
    if not result.unsatisfiable:
      write_assignment(result.interval, args.out_assignment)
    checks = []
    code = EXIT_OK
    if args.solve:
      solved = solve_psi(result)
      restricted = SolveResult(solved.satisfiable, restrict_witness(result, solved.witness) if solved.satisfiable else None, solved.stats)
      fields.update(solve_result_fields(restricted))
      checks = check_solve_result(graph, lists, restricted)
      code = EXIT_OK if solved.satisfiable else EXIT_NEGATIVE
    return code, {"fields": fields, "digests": _digests(args.graph, args.assignment), "checks": checks,
                  "summary": f"psi(G) has {result.graph.n} vertices including {len(result.pendant_map)} pendants"}

  coloring = read_assignment(args.coloring)
  intervals = read_assignment(args.assignment)
  if not isinstance(coloring, Coloring):
    raise AssignmentError(f"lift needs a coloring document, got '{_assignment_kind(coloring)}'")
  if not isinstance(intervals, IntervalAssignment):
    raise AssignmentError(f"lift needs an interval document, got '{_assignment_kind(intervals)}'")
  lifted = modular_lift(graph, coloring, intervals, args.k)
  result = SolveResult(True, lifted.coloring)
  fields = {"reduction": "lift", "candidates_inspected": lifted.candidates_inspected}
  fields.update(solve_result_fields(result))
  return EXIT_OK, {"fields": fields, "digests": _digests(args.graph, args.coloring, args.assignment),
                   "checks": check_solve_result(graph, interval_to_list(intervals), result),
                   "summary": f"Lifted coloring {lifted.coloring.as_tuple()} after inspecting {lifted.candidates_inspected} candidates"}

def cmd_chromatic(args, config) -> tuple[int, dict]:
  graph = read_graph(args.graph)
  number = chromatic_number(graph)
  fields = {"chromatic_number": number}
  if number > 0:
    fields.update(solve_result_fields(k_coloring(graph, number)))
  return EXIT_OK, {"fields": fields, "digests": _digests(args.graph), "summary": f"chromatic number = {number}"}

def cmd_count(args, config) -> tuple[int, dict]:
  count = assignment_count(args.n, args.k)
  return EXIT_OK, {"fields": {"n": args.n, "k": args.k, "count": count}, "digests": {},
                   "summary": f"There are {count} assignments of length-{args.k} intervals inside 1..{args.n}"}

commands = {
  "generate": cmd_generate,
  "solve": cmd_solve,
  "choosable": cmd_choosable,
  "reduce": cmd_reduce,
  "chromatic": cmd_chromatic,
  "count": cmd_count,
}

def main(argv:list[str]|None=None) -> int:
  """
  Runs one CLI command and returns its exit code: 0 for a positive answer, 1 for a negative one, 2 for errors.
  """
  argv = list(sys.argv[1:] if argv is None else argv)
  args = build_parser().parse_args(argv)
  started = time.perf_counter()
  try:
    config = load_config(args.config)
    if args.command == "survey":
      max_n = args.max_n or config.getint("survey", "max_n", fallback=5)
      survey = survey_graphs(max_n, get_budget(config, args.budget))
      survey_to_csv(survey, args.out)
      print(f"Output written to {args.out}")
      return EXIT_OK
    code, outcome = commands[args.command](args, config)
  except (GraphError, AssignmentError, ReductionError, BudgetExceededError, OSError, ValueError) as error:
    print(f"error: {error}", file=sys.stderr)
    return EXIT_ERROR

  report = build_run_report(
    ["colorlist"] + argv,
    outcome.get("digests", {}),
    outcome["fields"],
    time.perf_counter() - started,
    outcome.get("checks"),
    outcome.get("summary") if args.human else None,
  )
  print(report_to_json(report))
  return code

def colorlist():
  sys.exit(main())

if __name__ == "__main__":
  colorlist()
