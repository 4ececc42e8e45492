from concurrent.futures import ProcessPoolExecutor
from configparser import ConfigParser
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Optional, Sequence
from warnings import warn

from colorlist_tools.graphs import Graph
from colorlist_tools.assignments import (
  AssignmentError, Coloring, ListAssignment, KIntervalAssignment, interval_to_list,
  is_proper_coloring, respects_intervals
)
from colorlist_tools.solvers import SolverMode, SolveStats, exists_list_coloring, k_coloring
from colorlist_tools.reductions import ReductionError, modular_lift
from colorlist_tools.datamappers import mappings
from colorlist_tools.tools import load_config, get_budget, check_budget, chunk_ranges

class UniverseMode(str, Enum):
  """
  paper_literal: intervals of length k inside 1..n.
  normalized: start offsets from 1 whose consecutive distinct starts are at most k apart.
  """
  PAPER_LITERAL = "paper_literal"
  NORMALIZED = "normalized"

  @classmethod
  def parse(cls, value:"UniverseMode|str") -> "UniverseMode":
    if isinstance(value, cls):
      return value
    try:
      return cls(mappings.universe_modes[value])
    except KeyError:
      raise ValueError(f"Unknown universe mode '{value}'. Expected one of: {', '.join(mappings.universe_modes)}")

@dataclass(frozen=True)
class IntervalUniverse:
  """
  The interval start positions a k-interval assignment may use.

  Attributes:
    n (int): Vertex count the universe was built for.
    k (int): Interval length.
    starts (tuple): Ordered start positions.
    mode (UniverseMode): How the starts were chosen.
  """
  n: int
  k: int
  starts: tuple
  mode: UniverseMode = UniverseMode.PAPER_LITERAL

  def intervals(self) -> list[tuple[int, ...]]:
    return [tuple(range(s, s + self.k)) for s in self.starts]

def interval_universe(n:int, k:int) -> IntervalUniverse:
  """
  All length-k intervals inside {1..n}: starts 1..n-k+1.
  """
  if k < 1:
    raise ValueError(f"Interval length k must be at least 1, got {k}")
  if k > n:
    raise ValueError(f"Interval length k = {k} exceeds n = {n}; no interval of that size fits in 1..n")
  return IntervalUniverse(n, k, tuple(range(1, n - k + 2)))

def normalized_universe(n:int, k:int) -> IntervalUniverse:
  """
  Raw start positions 1..1+(n-1)k. Only assignments passing is_normalized are enumerated from it.
  """
  if k < 1 or n < 1:
    raise ValueError(f"Normalized universe needs n >= 1 and k >= 1, got n = {n}, k = {k}")
  return IntervalUniverse(n, k, tuple(range(1, 2 + (n - 1) * k)), UniverseMode.NORMALIZED)

def assignment_count(n:int, k:int) -> int:
  """
  Exact number of k-interval assignments over the paper_literal universe, (n-k+1)^n.
  """
  return len(interval_universe(n, k).starts) ** n

def is_normalized(starts:Sequence[int], k:int) -> bool:
  """
  True iff the smallest start is 1 and consecutive distinct starts differ by at most k.
  """
  if not starts:
    return True
  distinct = sorted(set(starts))
  return distinct[0] == 1 and all(b - a <= k for a, b in zip(distinct, distinct[1:]))

def colex_subsets(pool:int, k:int) -> list[frozenset]:
  """
  The k-subsets of {1..pool} in colex order (compare largest elements first).
  """
  return [frozenset(s) for s in sorted(combinations(range(1, pool + 1), k), key=lambda s: s[::-1])]

# Ordered assignment spaces

@dataclass(frozen=True)
class AssignmentSpace:
  """
  The product space choices^|vertices| in vertex-major lexicographic order. Index 0 is the assignment
  giving every vertex choices[0]; vertex vertices[0] is the most significant digit.

  Attributes:
    vertices (tuple): Vertex ids.
    choices (tuple): Per-vertex options: interval starts (kind 'interval') or color sets (kind 'subset').
    k (int): Interval length or list size.
    kind (str): 'interval' or 'subset'.
    normalized (bool): Skip interval assignments that are not normalized.
  """
  vertices: tuple
  choices: tuple
  k: int
  kind: str = "interval"
  normalized: bool = False

  @property
  def size(self) -> int:
    return len(self.choices) ** len(self.vertices)

  def digits(self, index:int) -> list[int]:
    if not 0 <= index < max(self.size, 1):
      raise IndexError(f"Assignment index {index} outside 0..{self.size - 1}")
    base = len(self.choices)
    digits = [0] * len(self.vertices)
    for pos in range(len(self.vertices) - 1, -1, -1):
      index, digits[pos] = divmod(index, base)
    return digits

  def iterate(self, start:int=0, stop:int|None=None) -> Iterator[tuple[int, tuple]]:
    """
    Yields (index, digits) for start <= index < stop without re-decoding each index.
    """
    stop = self.size if stop is None else min(stop, self.size)
    if start >= stop:
      return
    base = len(self.choices)
    digits = self.digits(start)
    for index in range(start, stop):
      yield index, tuple(digits)
      pos = len(digits) - 1
      while pos >= 0:
        digits[pos] += 1
        if digits[pos] < base:
          break
        digits[pos] = 0
        pos -= 1

  def admits(self, digits:Sequence[int]) -> bool:
    if not self.normalized:
      return True
    return is_normalized([self.choices[d] for d in digits], self.k)

  def build(self, digits:Sequence[int]) -> KIntervalAssignment | ListAssignment:
    picks = [self.choices[d] for d in digits]
    if self.kind == "interval":
      return KIntervalAssignment.from_starts(picks, self.k, self.vertices)
    return ListAssignment(dict(zip(self.vertices, picks)))

def interval_space(universe:IntervalUniverse, vertices:Sequence[int]|None=None) -> AssignmentSpace:
  if vertices is None:
    vertices = range(1, universe.n + 1)
  return AssignmentSpace(tuple(vertices), universe.starts, universe.k, "interval", universe.mode is UniverseMode.NORMALIZED)

def enumerate_assignments(universe:IntervalUniverse, vertices:Sequence[int]|None=None, start:int=0, stop:int|None=None) -> Iterator[KIntervalAssignment]:
  """
  Streams k-interval assignments in lexicographic order of the start tuple (first vertex most significant).
  start/stop select a contiguous index range so the stream can be split into disjoint chunks.

  :param universe: The interval universe.
  :type universe: IntervalUniverse

  :param vertices: Vertex ids. Default: 1..universe.n.
  :type vertices: Sequence[int]

  :return: Iterator of KIntervalAssignment
  """
  space = interval_space(universe, vertices)
  for _, digits in space.iterate(start, stop):
    if space.admits(digits):
      yield space.build(digits)

def assignment_at(universe:IntervalUniverse, vertices:Sequence[int]|None, index:int) -> KIntervalAssignment:
  """
  The assignment at position index of the unfiltered enumeration order.
  """
  space = interval_space(universe, vertices)
  return space.build(space.digits(index))

# (k:1) bijection

def singleton_selection(coloring:Coloring) -> dict[int, frozenset]:
  """
  Phi(v) = {c(v)}.
  """
  return {v: frozenset({c}) for v, c in coloring.colors.items()}

def selection_to_coloring(selection:dict[int, frozenset]) -> Coloring:
  colors = {}
  for v, chosen in selection.items():
    if len(chosen) != 1:
      raise AssignmentError(f"Selection at vertex {v} must be a singleton, got {sorted(chosen)}")
    colors[v] = next(iter(chosen))
  return Coloring(colors)

def is_valid_selection(graph:Graph, lists:ListAssignment, selection:dict[int, frozenset]) -> bool:
  """
  |Phi(v)| = 1, Phi(v) subset of L(v), and Phi(u), Phi(v) disjoint on every edge.
  """
  if set(selection) != set(graph.vertices):
    return False
  if any(len(selection[v]) != 1 or not selection[v] <= lists[v] for v in graph.vertices):
    return False
  return all(not (selection[u] & selection[v]) for u, v in graph.edges)

# Verdicts and evaluation

@dataclass
class ChoosabilityVerdict:
  """
  Attributes:
    choosable (bool): Every enumerated assignment admits a proper list coloring.
    counterexample: The first failing assignment in enumeration order, or None.
    assignments_checked (int): Assignments examined up to and including the first failure, or all of them.
    k (int): The list size or interval length tested.
    counterexample_index (int): Position of the counterexample in the unfiltered enumeration order.
    stats (SolveStats): Solver work summed over every evaluated assignment.
  """
  choosable: bool
  counterexample: Optional[KIntervalAssignment | ListAssignment]
  assignments_checked: int
  k: int
  counterexample_index: Optional[int] = None
  stats: SolveStats = field(default_factory=SolveStats)

  def __repr__(self) -> str:
    return f"ChoosabilityVerdict: k={self.k}, choosable={self.choosable}, checked={self.assignments_checked}, counterexample_index={self.counterexample_index}"

@dataclass(frozen=True)
class _ChunkJob:
  graph: Graph
  space: AssignmentSpace
  check: str
  solver_mode: SolverMode
  start: int
  stop: int
  base_coloring: Optional[Coloring] = None

@dataclass
class _ChunkOutcome:
  failing_index: Optional[int]
  checked: int
  stats: SolveStats

def _assignment_colorable(job:_ChunkJob, assignment) -> tuple[bool, SolveStats]:
  match job.check:
    case "list":
      lists = interval_to_list(assignment) if job.space.kind == "interval" else assignment
      result = exists_list_coloring(job.graph, lists, job.solver_mode)
      return result.satisfiable, result.stats
    case "selection":
      result = exists_list_coloring(job.graph, assignment, job.solver_mode)
      if not result.satisfiable:
        return False, result.stats
      selection = singleton_selection(result.witness)
      if not is_valid_selection(job.graph, assignment, selection):
        raise RuntimeError(f"Singleton selection built from a witness is invalid for {assignment}")
      return True, result.stats
    case "lift":
      lifted = modular_lift(job.graph, job.base_coloring, assignment).coloring
      if not (is_proper_coloring(job.graph, lifted) and respects_intervals(lifted, assignment)):
        raise ReductionError(f"Residue lift produced an invalid coloring for {assignment}")
      return True, SolveStats()
    case _:
      raise ValueError(f"Unknown check '{job.check}'")

def _evaluate_chunk(job:_ChunkJob) -> _ChunkOutcome:
  stats = SolveStats()
  checked = 0
  for index, digits in job.space.iterate(job.start, job.stop):
    if not job.space.admits(digits):
      continue
    checked += 1
    colorable, run_stats = _assignment_colorable(job, job.space.build(digits))
    stats.add(run_stats)
    if not colorable:
      return _ChunkOutcome(index, checked, stats)
  return _ChunkOutcome(None, checked, stats)

def _decide(graph:Graph, space:AssignmentSpace, check:str, solver_mode:SolverMode, budget:int|None, force:bool,
            workers:int, base_coloring:Coloring|None=None) -> ChoosabilityVerdict:
  """
  Runs the universal check over space. With workers > 1 the index range is split into contiguous chunks;
  the verdict is the conjunction of the chunks and the counterexample is the one with the smallest index,
  so results do not depend on the worker count.
  """
  if budget is None:
    budget = get_budget()
  check_budget(space.size, budget, force)

  if workers > 1 and space.size < 2 * workers:
    warn(f"Only {space.size} assignments to check; running on one worker instead of {workers}.", RuntimeWarning)
    workers = 1
  ranges = chunk_ranges(space.size, workers * 4) if workers > 1 else [(0, space.size)]
  jobs = [_ChunkJob(graph, space, check, solver_mode, start, stop, base_coloring) for start, stop in ranges]
  if workers > 1:
    with ProcessPoolExecutor(max_workers=workers) as executor:
      outcomes = list(executor.map(_evaluate_chunk, jobs))
  else:
    outcomes = [_evaluate_chunk(job) for job in jobs]

  stats = SolveStats()
  checked = 0
  for outcome in outcomes:
    stats.add(outcome.stats)
    checked += outcome.checked
    if outcome.failing_index is not None:
      counterexample = space.build(space.digits(outcome.failing_index))
      return ChoosabilityVerdict(False, counterexample, checked, space.k, outcome.failing_index, stats)
  return ChoosabilityVerdict(True, None, checked, space.k, None, stats)

def _default_workers(config:ConfigParser|None=None) -> int:
  return (config or load_config()).getint("choosability", "workers", fallback=1)

# Interval-based choosability

def is_k_gamma_mu_choosable(graph:Graph, k:int, universe_mode:UniverseMode|str=UniverseMode.PAPER_LITERAL,
                            solver_mode:SolverMode|str=SolverMode.PRUNED, budget:int|None=None, force:bool=False,
                            workers:int|None=None, config:ConfigParser|None=None) -> ChoosabilityVerdict:
  """
  Decides whether every k-interval assignment from the universe admits a proper coloring
  (for all L there exists c). Each assignment is checked with exists_list_coloring.

  :param graph: The graph.
  :type graph: Graph

  :param k: Interval length.
  :type k: int

  :param universe_mode: paper_literal (intervals inside 1..n, requires k <= n) or normalized. Default: paper_literal.
  :type universe_mode: UniverseMode | str

  :param solver_mode: Inner solver mode. Default: pruned.
  :type solver_mode: SolverMode | str

  :param budget: Maximum number of assignments. Default: from config / COLORLIST_BUDGET.
  :type budget: int

  :param force: Run even when the budget is exceeded. Default: False.
  :type force: bool

  :param workers: Worker processes. Default: from config.
  :type workers: int

  :return: ChoosabilityVerdict
  """
  universe_mode = UniverseMode.parse(universe_mode)
  if k < 1:
    raise ValueError(f"Interval length k must be at least 1, got {k}")
  if universe_mode is UniverseMode.NORMALIZED:
    warn("The normalized universe enumerates (1 + (n - 1)k)^n raw start tuples and filters them; expect long runs.", RuntimeWarning)
    universe = normalized_universe(graph.n, k)
  else:
    universe = interval_universe(graph.n, k)
  space = interval_space(universe)
  return _decide(graph, space, "list", SolverMode.parse(solver_mode), budget, force, workers or _default_workers(config))

def gamma_mu_choosability_number(graph:Graph, universe_mode:UniverseMode|str=UniverseMode.PAPER_LITERAL,
                                 solver_mode:SolverMode|str=SolverMode.PRUNED, strict_paper:bool=False,
                                 budget:int|None=None, force:bool=False, workers:int|None=None,
                                 config:ConfigParser|None=None) -> int:
  """
  Smallest k for which graph is k-(gamma, mu)-choosable, searching upward from k = 1.
  strict_paper starts at k = 2 instead; once k exceeds n the paper_literal universe is empty and that k is returned.
  """
  if graph.n < 1:
    raise ValueError("The (gamma, mu)-choosability number needs at least one vertex")
  universe_mode = UniverseMode.parse(universe_mode)
  if strict_paper:
    k = 2
  else:
    k = (config or load_config()).getint("choosability", "start_k", fallback=1)
  while True:
    if universe_mode is UniverseMode.PAPER_LITERAL and k > graph.n:
      if strict_paper:
        return k
      raise RuntimeError(f"No k <= n = {graph.n} was choosable; this contradicts the uniform-interval bound")
    verdict = is_k_gamma_mu_choosable(graph, k, universe_mode, solver_mode, budget, force, workers, config)
    if verdict.choosable:
      return k
    k += 1

def is_k_gamma_mu_choosable_by_lift(graph:Graph, k:int, coloring:Coloring|None=None, budget:int|None=None,
                                    force:bool=False, workers:int|None=None, config:ConfigParser|None=None) -> ChoosabilityVerdict:
  """
  Certifies k-(gamma, mu)-choosability from a known proper k-coloring: every assignment in the paper_literal
  universe is colored by the residue lift and the lifted coloring is re-verified. No search is done per assignment.

  :param coloring: A proper coloring with colors in 1..k. Default: found with k_coloring.
  :type coloring: Coloring

  :return: ChoosabilityVerdict
  """
  if coloring is None:
    found = k_coloring(graph, k)
    if not found.satisfiable:
      raise AssignmentError(f"Graph has no proper {k}-coloring to lift")
    coloring = found.witness
  elif not is_proper_coloring(graph, coloring) or max(coloring.colors.values(), default=1) > k:
    raise AssignmentError(f"Supplied coloring is not a proper {k}-coloring")
  space = interval_space(interval_universe(graph.n, k))
  return _decide(graph, space, "lift", SolverMode.PRUNED, budget, force, workers or _default_workers(config), coloring)

# Classical choosability

def default_pool(graph:Graph, k:int, config:ConfigParser|None=None) -> int:
  factor = (config or load_config()).getint("classical", "pool_factor", fallback=1)
  return max(k, factor * graph.n * k)

def _subset_space(graph:Graph, k:int, pool:int|None, config:ConfigParser|None=None) -> AssignmentSpace:
  if k < 1:
    raise ValueError(f"List size k must be at least 1, got {k}")
  if pool is None:
    pool = default_pool(graph, k, config)
  if pool < k:
    raise AssignmentError(f"Color pool {pool} is smaller than the list size {k}")
  return AssignmentSpace(tuple(graph.vertices), tuple(colex_subsets(pool, k)), k, "subset")

def is_k_choosable(graph:Graph, k:int, pool:int|None=None, solver_mode:SolverMode|str=SolverMode.PRUNED,
                   budget:int|None=None, force:bool=False, workers:int|None=None,
                   config:ConfigParser|None=None) -> ChoosabilityVerdict:
  """
  Classical k-choosability relative to a color pool: every assignment of k-subsets of {1..pool} admits
  a proper list coloring. Assignments are enumerated vertex-major with subsets in colex order.

  :param pool: Number of colors to draw lists from. Default: pool_factor * n * k from config.
  :type pool: int

  :return: ChoosabilityVerdict whose counterexample is a ListAssignment
  """
  space = _subset_space(graph, k, pool, config)
  return _decide(graph, space, "list", SolverMode.parse(solver_mode), budget, force, workers or _default_workers(config))

def is_k1_choosable(graph:Graph, k:int, pool:int|None=None, solver_mode:SolverMode|str=SolverMode.PRUNED,
                    budget:int|None=None, force:bool=False, workers:int|None=None,
                    config:ConfigParser|None=None) -> ChoosabilityVerdict:
  """
  (k:1)-choosability: every assignment admits singleton selections Phi(v) subset of L(v) that are disjoint
  across edges. Each selection is built from a list-coloring witness through the bijection Phi(v) = {c(v)}.
  """
  space = _subset_space(graph, k, pool, config)
  return _decide(graph, space, "selection", SolverMode.parse(solver_mode), budget, force, workers or _default_workers(config))

def choice_number(graph:Graph, pool:int|None=None, budget:int|None=None, force:bool=False, workers:int|None=None,
                  config:ConfigParser|None=None) -> int:
  """
  Smallest k with is_k_choosable(graph, k, pool). 0 for the graph without vertices.
  """
  if graph.n == 0:
    return 0
  k = 1
  while not is_k_choosable(graph, k, pool, budget=budget, force=force, workers=workers, config=config).choosable:
    k += 1
  return k
