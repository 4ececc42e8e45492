import pytest
from pathlib import Path
from configparser import ConfigParser

import networkx as nx

from colorlist_tools.graphs import Graph

@pytest.fixture
def config():
    config_path = Path(__file__).resolve().parent.parent / 'colorlist_tools' / 'config.toml'
    assert config_path.exists(), f"Config found at {config_path}"

    cfg = ConfigParser()
    cfg.read(config_path)
    return cfg

@pytest.fixture(autouse=True)
def clear_budget_env(monkeypatch):
    monkeypatch.delenv("COLORLIST_BUDGET", raising=False)

def atlas_graphs(max_n, min_n=1):
    """
    Every non-isomorphic graph with min_n <= n <= max_n (max_n <= 7), as Graph objects.
    """
    graphs = []
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if n > max_n:
            break
        if n >= min_n:
            graphs.append(Graph.from_networkx(nx_graph))
    return graphs

@pytest.fixture(scope="session")
def graphs_up_to_4():
    return atlas_graphs(4)

@pytest.fixture(scope="session")
def graphs_up_to_5():
    return atlas_graphs(5)

@pytest.fixture(scope="session")
def graphs_up_to_6():
    return atlas_graphs(6)
