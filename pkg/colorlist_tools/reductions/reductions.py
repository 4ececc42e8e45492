from dataclasses import dataclass, field
from typing import Optional

from colorlist_tools.graphs import Graph
from colorlist_tools.assignments import (
  Coloring, ListAssignment, IntervalAssignment, KIntervalAssignment,
  is_proper_coloring, respects_lists, respects_intervals, check_lists_total, check_intervals_total
)
from colorlist_tools.solvers import SolveResult, SolverMode, gamma_mu_coloring, k_coloring, bipartite_coloring

class ReductionError(ValueError):
  """
  Raised when a coloring handed to a reduction violates that reduction's precondition.
  """

# Pendant-vertex reduction from list coloring to (gamma, mu)-coloring

@dataclass
class PsiResult:
  """
  The interval instance built from a list instance (G, L).

  Attributes:
    graph (Graph): psi(G). Original vertices keep their ids; pendants are numbered from n + 1.
    interval (IntervalAssignment): [1, c_max] on original vertices, [i, i] on the pendant blocking color i.
      None when the result is degenerate (see unsatisfiable).
    pendant_map (dict): (original vertex, blocked color) -> pendant vertex id.
    c_max (int): Largest color in any list.
    unsatisfiable (bool): Set when every list is empty on a non-empty graph, so [1, c_max] does not exist.
    source_graph (Graph): G.
    source_lists (ListAssignment): L.
  """
  graph: Graph
  interval: Optional[IntervalAssignment]
  pendant_map: dict = field(default_factory=dict)
  c_max: int = 0
  unsatisfiable: bool = False
  source_graph: Graph = None
  source_lists: ListAssignment = None

  def pendants_at(self, v:int) -> list[int]:
    return [w for (parent, _), w in self.pendant_map.items() if parent == v]

def psi_transform(graph:Graph, lists:ListAssignment) -> PsiResult:
  """
  For every vertex v and every color i in 1..c_max missing from L(v), attaches a pendant vertex
  with gamma = mu = i, and gives every original vertex the interval [1, c_max]. Linear in the size of (G, L).

  :param graph: The list instance's graph.
  :type graph: Graph

  :param lists: A list assignment total on V(G).
  :type lists: ListAssignment

  :return: PsiResult
  """
  check_lists_total(graph, lists)
  c_max = lists.max_color
  if c_max == 0 and graph.n > 0:
    return PsiResult(graph, None, {}, 0, True, graph, lists)

  edges = set(graph.edges)
  gamma = {v: 1 for v in graph.vertices}
  mu = {v: c_max for v in graph.vertices}
  pendant_map = {}
  next_id = graph.n + 1
  for v in graph.vertices:
    for color in range(1, c_max + 1):
      if color in lists[v]:
        continue
      edges.add((v, next_id))
      gamma[next_id] = mu[next_id] = color
      pendant_map[(v, color)] = next_id
      next_id += 1
  psi_graph = Graph(next_id - 1, frozenset(edges))
  return PsiResult(psi_graph, IntervalAssignment(gamma, mu), pendant_map, c_max, False, graph, lists)

def solve_psi(result:PsiResult, mode:SolverMode|str=SolverMode.PRUNED) -> SolveResult:
  """
  (gamma, mu)-coloring of psi(G), honouring the degenerate unsatisfiable marker.
  """
  if result.unsatisfiable:
    return SolveResult(False)
  return gamma_mu_coloring(result.graph, result.interval, mode)

def restrict_witness(result:PsiResult, coloring:Coloring) -> Coloring:
  """
  Restricts a (gamma, mu)-coloring of psi(G) to the original vertices. The restriction is a proper
  list coloring of (G, L): a pendant forced to color i makes i unavailable at its parent.
  """
  if result.unsatisfiable:
    raise ReductionError("The instance has only empty lists; no coloring of psi(G) exists to restrict")
  if not is_proper_coloring(result.graph, coloring):
    raise ReductionError("Coloring is not proper on psi(G)")
  if not respects_intervals(coloring, result.interval):
    raise ReductionError("Coloring leaves the (gamma, mu) intervals of psi(G)")
  return Coloring({v: coloring[v] for v in result.source_graph.vertices})

def extend_witness(result:PsiResult, coloring:Coloring) -> Coloring:
  """
  Extends a proper list coloring of (G, L) to psi(G) by giving each pendant its forced color.
  """
  if not is_proper_coloring(result.source_graph, coloring) or not respects_lists(coloring, result.source_lists):
    raise ReductionError("Coloring is not a proper list coloring of the source instance")
  colors = dict(coloring.colors)
  for (_, color), pendant in result.pendant_map.items():
    colors[pendant] = color
  return Coloring(colors)

# Residue-class lift from a k-coloring to a k-(gamma, mu)-coloring

@dataclass
class LiftResult:
  coloring: Coloring
  candidates_inspected: int

def residue_class(color:int, k:int) -> int:
  """
  The residue class targeted by color in 1..k. Color k maps to class 0.
  """
  return color % k

def modular_lift(graph:Graph, coloring:Coloring, intervals:IntervalAssignment, k:int|None=None) -> LiftResult:
  """
  Picks, inside each vertex's length-k interval, the unique element congruent to the vertex's color
  modulo k. Adjacent vertices have different colors in 1..k, hence different residues, hence different
  picks. Inspects exactly k candidates per vertex.

  :param graph: The graph.
  :type graph: Graph

  :param coloring: A proper coloring with colors in 1..k.
  :type coloring: Coloring

  :param intervals: Intervals of length exactly k on every vertex.
  :type intervals: IntervalAssignment | KIntervalAssignment

  :param k: Interval length. Defaults to intervals.k, or to the common length of a plain IntervalAssignment.
  :type k: int

  :return: LiftResult
  """
  check_intervals_total(graph, intervals)
  if k is None:
    k = getattr(intervals, "k", None)
  lengths = {intervals.length(v) for v in intervals.vertices}
  if k is None:
    if len(lengths) > 1:
      raise ReductionError(f"Intervals have differing lengths {sorted(lengths)}")
    k = lengths.pop() if lengths else 1
  if any(length != k for length in lengths):
    raise ReductionError(f"Every interval must have length {k}, found lengths {sorted(lengths)}")
  if not is_proper_coloring(graph, coloring):
    raise ReductionError("Base coloring is not proper")
  for v in graph.vertices:
    if coloring[v] > k:
      raise ReductionError(f"Base coloring uses color {coloring[v]} at vertex {v}, above k = {k}")

  lifted = {}
  inspected = 0
  for v in graph.vertices:
    target = residue_class(coloring[v], k)
    matches = []
    for candidate in range(intervals.gamma[v], intervals.mu[v] + 1):
      inspected += 1
      if candidate % k == target:
        matches.append(candidate)
    if len(matches) != 1:
      raise RuntimeError(f"Interval at vertex {v} holds {len(matches)} elements of residue {target} mod {k}")
    lifted[v] = matches[0]
  return LiftResult(Coloring(lifted), inspected)

def k_gamma_mu_coloring(graph:Graph, intervals:KIntervalAssignment) -> SolveResult:
  """
  k-(gamma, mu)-coloring by finding a k-coloring and lifting it. Polynomial whenever the k-coloring step is,
  which is the case for k = 2 (bipartition). Graphs that are not k-colorable fall back to exact search.
  """
  k = intervals.k
  base = bipartite_coloring(graph) if k == 2 else k_coloring(graph, k)
  if not base.satisfiable:
    # Without a k-coloring the particular intervals may still admit a coloring
    fallback = gamma_mu_coloring(graph, intervals)
    fallback.stats.add(base.stats)
    return fallback
  return SolveResult(True, modular_lift(graph, base.witness, intervals, k).coloring, base.stats)
