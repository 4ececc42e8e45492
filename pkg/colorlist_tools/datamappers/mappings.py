import networkx as nx

# Graph families accepted by graphs.generate. Value = (networkx generator, number of size parameters, minimum size)
graph_families = {
    "path": (nx.path_graph, 1, 1),
    "cycle": (nx.cycle_graph, 1, 3),
    "complete": (nx.complete_graph, 1, 1),
    "complete_bipartite": (nx.complete_bipartite_graph, 2, 1),
    "star": (nx.star_graph, 1, 1),
    "edgeless": (nx.empty_graph, 1, 1),
}

# Dict to convert CLI solve models to the assignment document kind they expect
model_assignment_kinds = {
    "list": "list",
    "mu": "mu",
    "gammamu": "interval",
    "precolor": "precoloring",
    "kcolor": None,
}

# Assignment document kinds and the fields each one must carry
assignment_kind_fields = {
    "list": ("lists",),
    "interval": ("gamma", "mu"),
    "mu": ("mu",),
    "precoloring": ("fixed", "k"),
    "coloring": ("colors",),
}

# CLI spellings to internal mode names
universe_modes = {
    "paper-literal": "paper_literal",
    "paper_literal": "paper_literal",
    "normalized": "normalized",
}

solver_modes = {
    "paper-literal": "paper_literal",
    "paper_literal": "paper_literal",
    "pruned": "pruned",
}
