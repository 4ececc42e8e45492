import json
from pathlib import Path

from colorlist_tools.graphs import Graph, GraphError
from colorlist_tools.assignments import (
  AssignmentError, Coloring, ListAssignment, IntervalAssignment, MuAssignment, Precoloring
)
from colorlist_tools.datamappers import mappings

class GraphFormatError(GraphError):
  """
  Raised for graph text that does not follow the 'p edge n m' / 'e u v' format.
  """

def parse_graph(text:str) -> Graph:
  """
  Parses the DIMACS-like graph format: an optional run of 'c' comment lines, one header line
  'p edge <n> <m>', then m lines 'e <u> <v>'. Blank lines are ignored.

  :param text: The file contents.
  :type text: str

  :return: Graph
  """
  header = None
  edges = []
  for line_number, raw_line in enumerate(text.splitlines(), start=1):
    line = raw_line.strip()
    if not line:
      continue
    fields = line.split()
    if fields[0] == "c":
      continue
    if fields[0] == "p":
      if header is not None:
        raise GraphFormatError(f"Line {line_number}: malformed header: second 'p' line")
      if len(fields) != 4 or fields[1] != "edge":
        raise GraphFormatError(f"Line {line_number}: malformed header '{line}', expected 'p edge <n> <m>'")
      header = (_parse_count(fields[2], line_number), _parse_count(fields[3], line_number))
    elif fields[0] == "e":
      if header is None:
        raise GraphFormatError(f"Line {line_number}: edge before header")
      if len(fields) != 3:
        raise GraphFormatError(f"Line {line_number}: malformed edge line '{line}', expected 'e <u> <v>'")
      u, v = _parse_count(fields[1], line_number), _parse_count(fields[2], line_number)
      for endpoint in (u, v):
        if not 1 <= endpoint <= header[0]:
          raise GraphFormatError(f"Line {line_number}: endpoint out of range: {endpoint} not in 1..{header[0]}")
      edges.append((u, v))
    else:
      raise GraphFormatError(f"Line {line_number}: unknown line type '{fields[0]}'")

  if header is None:
    raise GraphFormatError("malformed header: no 'p edge' line found")
  n, m = header
  if m != len(edges):
    raise GraphFormatError(f"malformed header: declares {m} edges but {len(edges)} were listed")
  try:
    return Graph(n, frozenset(edges))
  except GraphError as error:
    raise GraphFormatError(str(error))

def _parse_count(token:str, line_number:int) -> int:
  try:
    value = int(token)
  except ValueError:
    raise GraphFormatError(f"Line {line_number}: expected an integer, got '{token}'")
  if value < 0:
    raise GraphFormatError(f"Line {line_number}: expected a non-negative integer, got {value}")
  return value

def read_graph(path:str|Path) -> Graph:
  with open(path, "r") as file:
    return parse_graph(file.read())

# Assignment documents

def _vertex_map(document:dict, name:str) -> dict:
  values = document.get(name)
  if not isinstance(values, dict):
    raise AssignmentError(f"Assignment field '{name}' must be a map from vertex id to value")
  converted = {}
  for key, value in values.items():
    if not isinstance(key, str) or not key.isdigit() or str(int(key)) != key:
      raise AssignmentError(f"Vertex id '{key}' in '{name}' must be a decimal string like \"1\"")
    converted[int(key)] = value
  return converted

def parse_assignment(text:str) -> ListAssignment | IntervalAssignment | MuAssignment | Precoloring | Coloring:
  """
  Parses a JSON assignment document. The 'kind' field selects the type:

  - list: {"kind": "list", "lists": {"1": [1, 2], ...}}
  - interval: {"kind": "interval", "gamma": {...}, "mu": {...}}
  - mu: {"kind": "mu", "mu": {...}}
  - precoloring: {"kind": "precoloring", "fixed": {...}, "k": 3}
  - coloring: {"kind": "coloring", "colors": {...}}

  :param text: The document text.
  :type text: str

  :return: The assignment object for the document's kind.
  """
  try:
    document = json.loads(text)
  except json.JSONDecodeError as error:
    raise AssignmentError(f"Assignment document is not valid JSON: {error}")
  if not isinstance(document, dict):
    raise AssignmentError("Assignment document must be a JSON object")
  kind = document.get("kind")
  if not isinstance(kind, str) or kind not in mappings.assignment_kind_fields:
    raise AssignmentError(f"Unknown assignment kind {kind!r}. Expected one of: {', '.join(mappings.assignment_kind_fields)}")
  for required in mappings.assignment_kind_fields[kind]:
    if required not in document:
      raise AssignmentError(f"Assignment of kind '{kind}' is missing field '{required}'")

  match kind:
    case "list":
      lists = _vertex_map(document, "lists")
      for v, colors in lists.items():
        if not isinstance(colors, list):
          raise AssignmentError(f"List at vertex {v} must be an array of colors")
        for color in colors:
          if isinstance(color, bool) or not isinstance(color, int):
            raise AssignmentError(f"List color at vertex {v} must be an integer, got {color!r}")
      return ListAssignment({v: frozenset(colors) for v, colors in lists.items()})
    case "interval":
      return IntervalAssignment(_vertex_map(document, "gamma"), _vertex_map(document, "mu"))
    case "mu":
      return MuAssignment(_vertex_map(document, "mu"))
    case "precoloring":
      return Precoloring(_vertex_map(document, "fixed"), document["k"])
    case "coloring":
      return Coloring(_vertex_map(document, "colors"))

def read_assignment(path:str|Path):
  with open(path, "r") as file:
    return parse_assignment(file.read())
