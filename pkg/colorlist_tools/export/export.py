import json
from pathlib import Path

import networkx as nx
import pandas as pd

from colorlist_tools.graphs import Graph
from colorlist_tools.assignments import (
  Coloring, ListAssignment, IntervalAssignment, MuAssignment, Precoloring
)
from colorlist_tools.solvers import SolveResult, chromatic_number
from colorlist_tools.reductions import PsiResult
from colorlist_tools.choosability import ChoosabilityVerdict, gamma_mu_choosability_number
from colorlist_tools.tools import load_config

def serialize_graph(graph:Graph) -> str:
  """
  Canonical graph text: 'p edge n m' followed by one 'e u v' line per edge, u < v, edges sorted.
  """
  lines = [f"p edge {graph.n} {graph.m}"]
  lines.extend(f"e {u} {v}" for u, v in graph.sorted_edges())
  return "\n".join(lines) + "\n"

def write_graph(graph:Graph, path:str|Path):
  with open(path, "w") as file:
    file.write(serialize_graph(graph))

def _keyed(values:dict) -> dict:
  return {str(v): value for v, value in values.items()}

def assignment_document(assignment) -> dict:
  """
  The JSON-ready document for an assignment or coloring. Vertex ids become decimal strings.

  :param assignment: A ListAssignment, IntervalAssignment (or KIntervalAssignment), MuAssignment, Precoloring or Coloring.

  :return: dict
  """
  match assignment:
    case ListAssignment():
      return {"kind": "list", "lists": {str(v): sorted(colors) for v, colors in assignment.lists.items()}}
    case IntervalAssignment():
      return {"kind": "interval", "gamma": _keyed(assignment.gamma), "mu": _keyed(assignment.mu)}
    case MuAssignment():
      return {"kind": "mu", "mu": _keyed(assignment.mu)}
    case Precoloring():
      return {"kind": "precoloring", "fixed": _keyed(assignment.fixed), "k": assignment.k}
    case Coloring():
      return {"kind": "coloring", "colors": _keyed(assignment.colors)}
  raise TypeError(f"Cannot serialize object of type {type(assignment).__name__} as an assignment document")

def serialize_assignment(assignment) -> str:
  return json.dumps(assignment_document(assignment), indent=2)

def write_assignment(assignment, path:str|Path):
  with open(path, "w") as file:
    file.write(serialize_assignment(assignment))

# Run reports

def solve_result_fields(result:SolveResult) -> dict:
  return {
    "verdict": "satisfiable" if result.satisfiable else "unsatisfiable",
    "witness": assignment_document(result.witness) if result.witness is not None else None,
    "stats": {"nodes": result.stats.nodes, "leaves": result.stats.leaves},
  }

def pendant_map_records(result:PsiResult) -> list[dict]:
  """
  The psi pendant map as records ordered by (vertex, blocked color).
  """
  return [{"vertex": v, "color": color, "pendant": w} for (v, color), w in sorted(result.pendant_map.items())]

def verdict_fields(verdict:ChoosabilityVerdict) -> dict:
  return {
    "verdict": "choosable" if verdict.choosable else "not_choosable",
    "k": verdict.k,
    "counterexample": assignment_document(verdict.counterexample) if verdict.counterexample is not None else None,
    "counterexample_index": verdict.counterexample_index,
    "stats": {
      "nodes": verdict.stats.nodes,
      "leaves": verdict.stats.leaves,
      "assignments_checked": verdict.assignments_checked,
    },
  }

def build_run_report(command:list[str], digests:dict, fields:dict, wall_time:float, checks:list[str]|None=None, summary:str|None=None) -> dict:
  """
  Assembles the report printed by every CLI command.

  :param command: The argument vector that was run.
  :type command: list[str]

  :param digests: Input file path -> sha256 hex digest.
  :type digests: dict

  :param fields: Command-specific fields, e.g. from solve_result_fields or verdict_fields.
  :type fields: dict

  :param wall_time: Seconds elapsed.
  :type wall_time: float

  :param checks: Problems found by qualitycontrol. Default: none.
  :type checks: list[str]

  :param summary: Prose summary, added for --human. Default: None.
  :type summary: str

  :return: dict
  """
  report = {"command": list(command), "inputs": dict(digests)}
  report.update(fields)
  report["checks"] = list(checks or [])
  report["wall_time"] = round(wall_time, 6)
  if summary is not None:
    report["summary"] = summary
  return report

def report_to_json(report:dict) -> str:
  return json.dumps(report, indent=2)

# Survey tables

def survey_graphs(max_n:int|None=None, budget:int|None=None, force:bool=False) -> pd.DataFrame:
  """
  Tabulates the chromatic number and the (gamma, mu)-choosability number of every graph in the
  networkx atlas with 1 <= n <= max_n.

  :param max_n: Largest vertex count. Default: [survey] max_n from config.
  :type max_n: int

  :return: pandas.DataFrame with columns atlas_index, n, m, chromatic_number, gamma_mu_choosability_number, agree
  """
  if max_n is None:
    max_n = load_config().getint("survey", "max_n", fallback=5)
  rows = []
  for index, nx_graph in enumerate(nx.graph_atlas_g()):
    n = nx_graph.number_of_nodes()
    if n == 0:
      continue
    if n > max_n:
      break
    graph = Graph.from_networkx(nx_graph)
    chromatic = chromatic_number(graph)
    choosability = gamma_mu_choosability_number(graph, budget=budget, force=force, workers=1)
    rows.append({
      "atlas_index": index,
      "n": graph.n,
      "m": graph.m,
      "chromatic_number": chromatic,
      "gamma_mu_choosability_number": choosability,
      "agree": chromatic == choosability,
    })
  return pd.DataFrame(rows, columns=["atlas_index", "n", "m", "chromatic_number", "gamma_mu_choosability_number", "agree"])

def survey_to_csv(survey:pd.DataFrame, out_name:str|Path):
  survey.to_csv(out_name, index=False)
