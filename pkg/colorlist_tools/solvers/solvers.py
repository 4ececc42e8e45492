from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import networkx as nx

from colorlist_tools.graphs import Graph
from colorlist_tools.assignments import (
  Coloring, ListAssignment, IntervalAssignment, MuAssignment, Precoloring,
  check_lists_total, check_intervals_total, interval_to_list, mu_to_list, uniform_lists,
  precoloring_to_list, residual_vertices
)
from colorlist_tools.datamappers import mappings

class SolverMode(str, Enum):
  """
  paper_literal colors every vertex before testing properness at the leaf.
  pruned rejects a color as soon as it clashes with an already colored neighbour.
  """
  PAPER_LITERAL = "paper_literal"
  PRUNED = "pruned"

  @classmethod
  def parse(cls, value:"SolverMode|str") -> "SolverMode":
    if isinstance(value, cls):
      return value
    try:
      return cls(mappings.solver_modes[value])
    except KeyError:
      raise ValueError(f"Unknown solver mode '{value}'. Expected one of: {', '.join(mappings.solver_modes)}")

@dataclass
class SolveStats:
  """
  nodes: color placements made. leaves: complete assignments tested for properness.
  """
  nodes: int = 0
  leaves: int = 0

  def add(self, other:"SolveStats"):
    self.nodes += other.nodes
    self.leaves += other.leaves

@dataclass
class SolveResult:
  satisfiable: bool
  witness: Optional[Coloring] = None
  stats: SolveStats = field(default_factory=SolveStats)

  def __repr__(self) -> str:
    return f"SolveResult: satisfiable={self.satisfiable}, witness={self.witness.as_tuple() if self.witness else None}, nodes={self.stats.nodes}, leaves={self.stats.leaves}"

def _search(graph:Graph, lists:list[list[int]], mode:SolverMode, stats:SolveStats) -> Optional[list[int]]:
  """
  Depth-first search over vertices 1..n in index order, colors ascending within each list.
  Returns the colors (index 0 unused) of the lexicographically first proper list coloring, or None.
  """
  n = graph.n
  if n == 0:
    stats.leaves += 1
    return []
  prune = mode is SolverMode.PRUNED
  colors = [0] * (n + 1)
  position = [-1] * (n + 1)
  i = 1
  while i >= 1:
    candidates = lists[i]
    position[i] += 1
    if prune:
      # Uncolored vertices hold 0, so only earlier neighbours can clash
      while position[i] < len(candidates) and any(colors[u] == candidates[position[i]] for u in graph.adjacency[i]):
        position[i] += 1
    if position[i] >= len(candidates):
      position[i] = -1
      colors[i] = 0
      i -= 1
      continue
    colors[i] = candidates[position[i]]
    stats.nodes += 1
    if i < n:
      i += 1
      continue
    stats.leaves += 1
    if prune or all(colors[u] != colors[v] for u, v in graph.edges):
      return colors
  return None

def exists_list_coloring(graph:Graph, lists:ListAssignment, mode:SolverMode|str=SolverMode.PRUNED) -> SolveResult:
  """
  Decides whether graph has a proper coloring with c(v) in L(v) for every vertex. Both modes return
  the same answer and, when satisfiable, the same lexicographically first witness.

  :param graph: The graph.
  :type graph: Graph

  :param lists: A list assignment total on V(G).
  :type lists: ListAssignment

  :param mode: paper_literal tests properness only at complete assignments; pruned cuts conflicting colors early.
    Default: pruned.
  :type mode: SolverMode | str

  :return: SolveResult
  """
  mode = SolverMode.parse(mode)
  check_lists_total(graph, lists)
  ordered = [[]] + [lists.sorted_list(v) for v in graph.vertices]
  stats = SolveStats()
  colors = _search(graph, ordered, mode, stats)
  if colors is None:
    return SolveResult(False, None, stats)
  return SolveResult(True, Coloring.from_sequence(colors[1:]), stats)

def k_coloring(graph:Graph, k:int, mode:SolverMode|str=SolverMode.PRUNED) -> SolveResult:
  """
  Classical k-coloring as list coloring with L(v) = {1..k} everywhere.
  """
  if k < 1:
    raise ValueError(f"k must be at least 1, got {k}")
  return exists_list_coloring(graph, uniform_lists(graph.vertices, range(1, k + 1)), mode)

def chromatic_number(graph:Graph) -> int:
  """
  Smallest k with a proper k-coloring. 0 for the graph without vertices.
  """
  if graph.n == 0:
    return 0
  k = 1
  while not k_coloring(graph, k).satisfiable:
    k += 1
  return k

def gamma_mu_coloring(graph:Graph, intervals:IntervalAssignment, mode:SolverMode|str=SolverMode.PRUNED) -> SolveResult:
  """
  (gamma, mu)-coloring: a proper coloring with gamma(v) <= c(v) <= mu(v).
  """
  check_intervals_total(graph, intervals)
  return exists_list_coloring(graph, interval_to_list(intervals), mode)

def mu_coloring(graph:Graph, mu_assignment:MuAssignment, mode:SolverMode|str=SolverMode.PRUNED) -> SolveResult:
  """
  mu-coloring: a proper coloring with c(v) <= mu(v).
  """
  return exists_list_coloring(graph, mu_to_list(mu_assignment), mode)

def precoloring_extension(graph:Graph, precoloring:Precoloring, mode:SolverMode|str=SolverMode.PRUNED) -> SolveResult:
  """
  Decides whether the partial coloring f' on W extends to a proper k-coloring of all of G.
  The witness is total on V(G) and agrees with f' on W.
  """
  residual, lists = precoloring_to_list(graph, precoloring)
  result = exists_list_coloring(residual, lists, mode)
  if not result.satisfiable:
    return result
  colors = dict(precoloring.fixed)
  for new_id, v in enumerate(residual_vertices(graph, precoloring), start=1):
    colors[v] = result.witness[new_id]
  return SolveResult(True, Coloring(colors), result.stats)

def bipartite_coloring(graph:Graph) -> SolveResult:
  """
  Polynomial 2-coloring by BFS bipartition. In each component the smallest vertex gets color 1.
  """
  nx_graph = graph.to_networkx()
  if not nx.is_bipartite(nx_graph):
    return SolveResult(False)
  colors = {}
  for component in sorted(nx.connected_components(nx_graph), key=min):
    root = min(component)
    colors[root] = 1
    for parent, child in nx.bfs_edges(nx_graph, root):
      colors[child] = 3 - colors[parent]
  return SolveResult(True, Coloring(colors))
