import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from colorlist_tools.graphs import Graph, remove_vertices

class AssignmentError(ValueError):
  """
  Raised for malformed colorings or assignments and for vertex-domain mismatches.
  """

def _check_color(value, what:str, vertex) -> int:
  if isinstance(value, bool) or not isinstance(value, int) or value < 1:
    raise AssignmentError(f"{what} at vertex {vertex} must be a positive integer, got {value!r}")
  return value

def _check_domain(domain:Iterable[int], graph:Graph, what:str):
  domain = set(domain)
  expected = set(graph.vertices)
  if domain != expected:
    missing = sorted(expected - domain)
    extra = sorted(domain - expected)
    raise AssignmentError(f"{what} is not total on V(G): missing {missing}, unexpected {extra}")

@dataclass(frozen=True)
class Coloring:
  """
  A vertex -> positive integer color map.
  """
  colors: Mapping[int, int]

  def __post_init__(self):
    checked = {v: _check_color(c, "Color", v) for v, c in self.colors.items()}
    object.__setattr__(self, "colors", dict(sorted(checked.items())))

  def __getitem__(self, v:int) -> int:
    return self.colors[v]

  def __len__(self) -> int:
    return len(self.colors)

  def as_tuple(self) -> tuple[int, ...]:
    """
    Colors in ascending vertex order.
    """
    return tuple(self.colors.values())

  @classmethod
  def from_sequence(cls, colors:Sequence[int]) -> "Coloring":
    """
    Vertex i + 1 gets colors[i].
    """
    return cls({v: c for v, c in enumerate(colors, start=1)})

@dataclass(frozen=True)
class ListAssignment:
  """
  Per-vertex finite color sets L(v). Empty lists are allowed and make the instance unsatisfiable.
  """
  lists: Mapping[int, frozenset]

  def __post_init__(self):
    checked = {}
    for v, colors in self.lists.items():
      checked[v] = frozenset(_check_color(c, "List color", v) for c in colors)
    object.__setattr__(self, "lists", dict(sorted(checked.items())))

  def __getitem__(self, v:int) -> frozenset:
    return self.lists[v]

  def sorted_list(self, v:int) -> list[int]:
    return sorted(self.lists[v])

  @property
  def max_color(self) -> int:
    """
    Largest color appearing in any list, 0 if all lists are empty.
    """
    return max((max(colors) for colors in self.lists.values() if colors), default=0)

@dataclass(frozen=True)
class IntervalAssignment:
  """
  Per-vertex bounds with gamma(v) <= mu(v). The allowed colors at v are gamma(v)..mu(v).
  """
  gamma: Mapping[int, int]
  mu: Mapping[int, int]

  def __post_init__(self):
    if set(self.gamma) != set(self.mu):
      raise AssignmentError("gamma and mu must be defined on the same vertices")
    for v in self.gamma:
      low = _check_color(self.gamma[v], "gamma", v)
      high = _check_color(self.mu[v], "mu", v)
      if low > high:
        raise AssignmentError(f"gamma({v}) = {low} exceeds mu({v}) = {high}")
    object.__setattr__(self, "gamma", dict(sorted(self.gamma.items())))
    object.__setattr__(self, "mu", dict(sorted(self.mu.items())))

  @property
  def vertices(self) -> list[int]:
    return list(self.gamma)

  def length(self, v:int) -> int:
    return self.mu[v] - self.gamma[v] + 1

@dataclass(frozen=True)
class KIntervalAssignment(IntervalAssignment):
  """
  An IntervalAssignment whose intervals all hold exactly k consecutive integers.
  """
  k: int

  def __post_init__(self):
    super().__post_init__()
    if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
      raise AssignmentError(f"Interval length k must be a positive integer, got {self.k!r}")
    for v in self.gamma:
      if self.length(v) != self.k:
        raise AssignmentError(f"Interval at vertex {v} has length {self.length(v)}, expected {self.k}")

  @property
  def starts(self) -> tuple[int, ...]:
    """
    Interval start positions in ascending vertex order.
    """
    return tuple(self.gamma.values())

  @classmethod
  def from_starts(cls, starts:Sequence[int], k:int, vertices:Sequence[int]|None=None) -> "KIntervalAssignment":
    if vertices is None:
      vertices = range(1, len(starts) + 1)
    gamma = dict(zip(vertices, starts))
    return cls(gamma=gamma, mu={v: s + k - 1 for v, s in gamma.items()}, k=k)

@dataclass(frozen=True)
class MuAssignment:
  """
  Per-vertex upper bounds mu(v) >= 1. The allowed colors at v are 1..mu(v).
  """
  mu: Mapping[int, int]

  def __post_init__(self):
    checked = {v: _check_color(m, "mu", v) for v, m in self.mu.items()}
    object.__setattr__(self, "mu", dict(sorted(checked.items())))

@dataclass(frozen=True)
class Precoloring:
  """
  A partial coloring f' of W (the keys of fixed) together with the total color budget k.
  Properness on G[W] depends on the graph and is checked by validate.
  """
  fixed: Mapping[int, int]
  k: int

  def __post_init__(self):
    if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
      raise AssignmentError(f"Color budget k must be a positive integer, got {self.k!r}")
    for v, c in self.fixed.items():
      _check_color(c, "Fixed color", v)
      if c > self.k:
        raise AssignmentError(f"Fixed color {c} at vertex {v} is outside 1..{self.k}")
    object.__setattr__(self, "fixed", dict(sorted(self.fixed.items())))

  def validate(self, graph:Graph):
    """
    Checks W is a subset of V(G) and f' is proper on G[W].
    """
    for v in self.fixed:
      if not 1 <= v <= graph.n:
        raise AssignmentError(f"Precolored vertex {v} is not in V(G) = 1..{graph.n}")
    for u, v in graph.sorted_edges():
      if u in self.fixed and v in self.fixed and self.fixed[u] == self.fixed[v]:
        raise AssignmentError(f"Precoloring is improper: adjacent vertices {u} and {v} both have color {self.fixed[u]}")

# Predicates

def is_proper_coloring(graph:Graph, coloring:Coloring) -> bool:
  """
  True iff no edge of graph has equally colored endpoints.

  :param graph: The graph.
  :type graph: Graph

  :param coloring: A coloring total on V(G).
  :type coloring: Coloring

  :return: bool
  """
  _check_domain(coloring.colors, graph, "Coloring")
  return all(coloring[u] != coloring[v] for u, v in graph.edges)

def respects_lists(coloring:Coloring, lists:ListAssignment) -> bool:
  """
  True iff c(v) is in L(v) for every vertex. Both maps must share the same vertex set.
  """
  if set(coloring.colors) != set(lists.lists):
    raise AssignmentError("Coloring and list assignment are defined on different vertex sets")
  return all(coloring[v] in lists[v] for v in lists.lists)

def respects_intervals(coloring:Coloring, intervals:IntervalAssignment) -> bool:
  if set(coloring.colors) != set(intervals.gamma):
    raise AssignmentError("Coloring and interval assignment are defined on different vertex sets")
  return all(intervals.gamma[v] <= coloring[v] <= intervals.mu[v] for v in intervals.gamma)

def check_lists_total(graph:Graph, lists:ListAssignment):
  _check_domain(lists.lists, graph, "List assignment")

def check_intervals_total(graph:Graph, intervals:IntervalAssignment):
  _check_domain(intervals.gamma, graph, "Interval assignment")

# Conversions

def interval_to_list(intervals:IntervalAssignment) -> ListAssignment:
  """
  L(v) = {gamma(v), ..., mu(v)}.
  """
  return ListAssignment({v: frozenset(range(intervals.gamma[v], intervals.mu[v] + 1)) for v in intervals.gamma})

def mu_to_list(mu_assignment:MuAssignment) -> ListAssignment:
  """
  L(v) = {1, ..., mu(v)}. mu-coloring is the gamma = 1 case of (gamma, mu)-coloring.
  """
  return ListAssignment({v: frozenset(range(1, m + 1)) for v, m in mu_assignment.mu.items()})

def uniform_lists(vertices:Iterable[int], colors:Iterable[int]) -> ListAssignment:
  colors = frozenset(colors)
  return ListAssignment({v: colors for v in vertices})

def residual_vertices(graph:Graph, precoloring:Precoloring) -> list[int]:
  """
  The uncolored vertices in ascending order. Residual vertex i of precoloring_to_list is residual_vertices(...)[i - 1].
  """
  return [v for v in graph.vertices if v not in precoloring.fixed]

def precoloring_to_list(graph:Graph, precoloring:Precoloring) -> tuple[Graph, ListAssignment]:
  """
  Removes the precolored vertices W and gives every remaining vertex the list {1..k} minus the colors
  of its precolored neighbours. Survivors are renumbered 1..n' in ascending order of their original ids.

  :param graph: The graph.
  :type graph: Graph

  :param precoloring: f' on W plus the color budget k.
  :type precoloring: Precoloring

  :return: (residual graph, list assignment on it)
  """
  precoloring.validate(graph)
  residual, kept = remove_vertices(graph, precoloring.fixed)
  palette = set(range(1, precoloring.k + 1))
  lists = {}
  for new_id, v in enumerate(kept, start=1):
    blocked = {precoloring.fixed[u] for u in graph.neighbors(v) if u in precoloring.fixed}
    lists[new_id] = frozenset(palette - blocked)
  return residual, ListAssignment(lists)

def random_k_intervals(vertices:Iterable[int], k:int, max_start:int, seed:int|random.Random) -> KIntervalAssignment:
  """
  Seeded random k-interval assignment with gamma(v) drawn uniformly from 1..max_start.

  :param seed: An int seed, or a random.Random instance to draw from.
  """
  rng = seed if isinstance(seed, random.Random) else random.Random(seed)
  vertices = list(vertices)
  return KIntervalAssignment.from_starts([rng.randint(1, max_start) for _ in vertices], k, vertices)
