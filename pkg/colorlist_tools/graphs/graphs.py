from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from colorlist_tools.datamappers import mappings

class GraphError(ValueError):
  """
  Raised for graphs that violate the simple-graph invariants or for bad generator requests.
  """

@dataclass(frozen=True)
class Graph:
  """
  A simple undirected graph on the vertices 1..n.

  Attributes:
    n (int): Vertex count.
    edges (frozenset): Unordered edges, each stored as (u, v) with u < v.
    adjacency (tuple): adjacency[v] is the ascending tuple of neighbours of v. Index 0 is unused.
  """
  n: int
  edges: frozenset = frozenset()
  adjacency: tuple = field(init=False, repr=False, compare=False)

  def __post_init__(self):
    if not isinstance(self.n, int) or self.n < 0:
      raise GraphError(f"Vertex count must be a non-negative integer, got {self.n!r}")
    normalized = set()
    for u, v in self.edges:
      self._check_endpoints(u, v)
      edge = (min(u, v), max(u, v))
      if edge in normalized:
        raise GraphError(f"Duplicate edge {edge}")
      normalized.add(edge)
    neighbours = [[] for _ in range(self.n + 1)]
    for u, v in normalized:
      neighbours[u].append(v)
      neighbours[v].append(u)
    object.__setattr__(self, "edges", frozenset(normalized))
    object.__setattr__(self, "adjacency", tuple(tuple(sorted(adj)) for adj in neighbours))

  def _check_endpoints(self, u, v):
    for endpoint in (u, v):
      if not isinstance(endpoint, int) or not 1 <= endpoint <= self.n:
        raise GraphError(f"Edge endpoint {endpoint!r} out of range 1..{self.n}")
    if u == v:
      raise GraphError(f"Self-loop at vertex {u}")

  def __repr__(self) -> str:
    return f"Graph(n={self.n}, m={self.m})"

  @property
  def m(self) -> int:
    return len(self.edges)

  @property
  def vertices(self) -> range:
    return range(1, self.n + 1)

  def neighbors(self, v:int) -> tuple:
    if not 1 <= v <= self.n:
      raise GraphError(f"Vertex {v} out of range 1..{self.n}")
    return self.adjacency[v]

  def degree(self, v:int) -> int:
    return len(self.neighbors(v))

  def sorted_edges(self) -> list[tuple[int, int]]:
    return sorted(self.edges)

  def to_networkx(self) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(self.vertices)
    nx_graph.add_edges_from(self.sorted_edges())
    return nx_graph

  @classmethod
  def from_networkx(cls, nx_graph:nx.Graph) -> "Graph":
    """
    Converts a networkx graph, relabelling its nodes in sorted order to 1..n.

    :param nx_graph: An undirected networkx graph without self-loops.
    :type nx_graph: networkx.Graph

    :return: Graph
    """
    labels = {node: i for i, node in enumerate(sorted(nx_graph.nodes()), start=1)}
    return from_edge_list(len(labels), [(labels[u], labels[v]) for u, v in nx_graph.edges()])

def from_edge_list(n:int, edges:Iterable[tuple[int, int]]) -> Graph:
  """
  Builds a Graph from an explicit edge list, rejecting self-loops, duplicates and out-of-range endpoints.

  :param n: Vertex count.
  :type n: int

  :param edges: Vertex pairs. (u, v) and (v, u) count as the same edge.
  :type edges: list of tuples

  :return: Graph
  """
  seen = set()
  for u, v in edges:
    if u == v:
      raise GraphError(f"Self-loop at vertex {u}")
    edge = (min(u, v), max(u, v))
    if edge in seen:
      raise GraphError(f"Duplicate edge {edge}")
    seen.add(edge)
  return Graph(n, frozenset(seen))

def generate(family:str, *params:int) -> Graph:
  """
  Generates a standard graph family with deterministic numbering: paths and cycles in order,
  complete bipartite graphs with part A before part B, stars with the centre as vertex 1.

  :param family: One of path, cycle, complete, complete_bipartite, star, edgeless.
  :type family: str

  :param params: Sizes. complete_bipartite takes two, star takes its leaf count, the rest take n.
  :type params: int

  :return: Graph
  """
  try:
    generator, arity, minimum = mappings.graph_families[family]
  except KeyError:
    raise GraphError(f"Unknown graph family '{family}'. Expected one of: {', '.join(mappings.graph_families)}")
  if len(params) != arity:
    raise GraphError(f"Family '{family}' takes {arity} size parameter(s), got {len(params)}")
  for size in params:
    if not isinstance(size, int) or size < minimum:
      raise GraphError(f"Family '{family}' needs sizes >= {minimum}, got {size!r}")
  return Graph.from_networkx(generator(*params))

def random_graph(n:int, p:float, seed:int) -> Graph:
  """
  Seeded Erdos-Renyi graph G(n, p).
  """
  return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))

def random_bipartite_graph(a:int, b:int, p:float, seed:int) -> Graph:
  """
  Seeded random bipartite graph with part A = 1..a and part B = a+1..a+b.
  """
  return Graph.from_networkx(nx.bipartite.random_graph(a, b, p, seed=seed))

def is_bipartite(graph:Graph) -> bool:
  return nx.is_bipartite(graph.to_networkx())

def add_pendant(graph:Graph, v:int) -> tuple[Graph, int]:
  """
  Attaches a new degree-1 vertex n+1 to v.

  :return: (new graph, id of the new vertex)
  """
  if not 1 <= v <= graph.n:
    raise GraphError(f"Vertex {v} out of range 1..{graph.n}")
  new_vertex = graph.n + 1
  return Graph(new_vertex, graph.edges | {(v, new_vertex)}), new_vertex

def remove_vertices(graph:Graph, removed:Iterable[int]) -> tuple[Graph, list[int]]:
  """
  Deletes the given vertices and renumbers the survivors 1..n' in ascending order of their old ids.

  :return: (residual graph, kept) where kept[i - 1] is the original id of residual vertex i.
  """
  removed = set(removed)
  kept = [v for v in graph.vertices if v not in removed]
  labels = {v: i for i, v in enumerate(kept, start=1)}
  edges = [(labels[u], labels[v]) for u, v in graph.sorted_edges() if u in labels and v in labels]
  return from_edge_list(len(kept), edges), kept
