import pytest
import networkx as nx
from hypothesis import given, strategies as st

from colorlist_tools.graphs import (
    Graph, GraphError, from_edge_list, generate, random_graph, random_bipartite_graph, is_bipartite,
    add_pendant, remove_vertices
)
from tests.conftest import atlas_graphs

def test_from_edge_list_path():
    """
    Tests from_edge_list on P3.
    Adjacency is symmetric and sorted.
    """
    p3 = from_edge_list(3, [(1, 2), (2, 3)])
    assert p3.n == 3
    assert p3.m == 2
    assert p3.neighbors(2) == (1, 3)
    assert p3.neighbors(1) == (2,)

def test_from_edge_list_cycle_and_singleton():
    c4 = from_edge_list(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert c4.sorted_edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    k1 = from_edge_list(1, [])
    assert k1.n == 1
    assert k1.m == 0

def test_from_edge_list_rejects_bad_edges():
    with pytest.raises(GraphError, match="out of range"):
        from_edge_list(2, [(1, 3)])
    with pytest.raises(GraphError, match="Self-loop"):
        from_edge_list(2, [(1, 1)])
    with pytest.raises(GraphError, match="Duplicate"):
        from_edge_list(2, [(1, 2), (2, 1)])

def test_generate_families():
    """
    Tests generate.
    Edge counts and vertex numbering are deterministic.
    """
    assert generate("complete", 3).m == 3
    c4 = generate("cycle", 4)
    assert c4.edges == frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})
    assert generate("path", 3).sorted_edges() == [(1, 2), (2, 3)]
    edgeless = generate("edgeless", 5)
    assert (edgeless.n, edgeless.m) == (5, 0)
    k23 = generate("complete_bipartite", 2, 3)
    assert k23.edges == frozenset((a, b) for a in (1, 2) for b in (3, 4, 5))
    star = generate("star", 3)
    assert star.n == 4
    assert star.degree(1) == 3

def test_generate_rejects_bad_requests():
    with pytest.raises(GraphError, match="Unknown graph family"):
        generate("petersen", 10)
    with pytest.raises(GraphError, match="sizes"):
        generate("complete", 0)
    with pytest.raises(GraphError, match="sizes"):
        generate("cycle", 2)
    with pytest.raises(GraphError, match="size parameter"):
        generate("complete_bipartite", 2)

def test_add_pendant():
    """
    Tests add_pendant.
    One new vertex of degree 1 and one new edge.
    """
    p2, new_vertex = add_pendant(generate("path", 1), 1)
    assert new_vertex == 2
    assert p2.edges == frozenset({(1, 2)})

    star, new_vertex = add_pendant(generate("path", 3), 2)
    assert new_vertex == 4
    assert star.degree(2) == 3
    assert star.degree(4) == 1

    with pytest.raises(GraphError):
        add_pendant(p2, 3)

def test_add_pendant_keeps_bipartite():
    """
    Adding a pendant to any vertex of a bipartite graph on at most 6 vertices keeps it bipartite.
    """
    for graph in atlas_graphs(6):
        if not is_bipartite(graph):
            continue
        for v in graph.vertices:
            extended, _ = add_pendant(graph, v)
            assert extended.n == graph.n + 1
            assert extended.m == graph.m + 1
            assert is_bipartite(extended)

def test_remove_vertices_renumbers():
    c4 = generate("cycle", 4)
    residual, kept = remove_vertices(c4, [1])
    assert kept == [2, 3, 4]
    assert residual.sorted_edges() == [(1, 2), (2, 3)]

def test_networkx_round_trip():
    k23 = generate("complete_bipartite", 2, 3)
    assert Graph.from_networkx(k23.to_networkx()) == k23
    labelled = nx.Graph([("b", "a"), ("c", "b")])
    assert Graph.from_networkx(labelled).sorted_edges() == [(1, 2), (2, 3)]

def test_random_graphs_are_seeded():
    assert random_graph(10, 0.4, seed=3) == random_graph(10, 0.4, seed=3)
    bipartite = random_bipartite_graph(5, 6, 0.5, seed=1)
    assert bipartite.n == 11
    assert is_bipartite(bipartite)
    assert all(u <= 5 < v for u, v in bipartite.edges)

@given(st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] < e[1])))))
def test_graph_invariants(instance):
    """
    Every constructed graph has symmetric, loop-free adjacency with endpoints in range.
    """
    n, edges = instance
    graph = from_edge_list(n, sorted(edges))
    assert graph.m == len(edges)
    for v in graph.vertices:
        assert v not in graph.neighbors(v)
        for u in graph.neighbors(v):
            assert v in graph.neighbors(u)
            assert 1 <= u <= n
