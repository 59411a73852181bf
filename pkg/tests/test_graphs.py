import networkx as nx
import pytest

from gridshadow.graphs import (Graph, complete_graph, cycle_graph, empty_graph, grotzsch_graph, mycielski,
                               mycielski_chain, path_graph, random_graph)
from gridshadow.solvers import chromatic_number, clique_number


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def test_graph_basics():
    g = Graph(4, [(1, 2), (3, 2), (4, 1)])
    assert g.edges() == [(1, 2), (1, 4), (2, 3)]
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)
    assert g.neighbors(2) == [1, 3]
    assert g.degree(1) == 2 and g.edge_count == 3
    assert g == Graph(4, [(2, 1), (2, 3), (1, 4)])
    assert hash(g) == hash(Graph(4, g.edges()))


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 1)], [(1, 5)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph(4, edges)


def test_from_masks_checks_symmetry():
    with pytest.raises(ValueError):
        Graph.from_masks([0b10, 0b00])
    assert Graph.from_masks([0b10, 0b01]) == complete_graph(2)


def test_induced_and_colorings():
    g = cycle_graph(5)
    assert g.induced([1, 2, 3]) == path_graph(3)
    assert g.is_clique([1, 2]) and not g.is_clique([1, 3])
    assert g.is_proper_coloring([0, 1, 0, 1, 2])
    assert not g.is_proper_coloring([0, 1, 0, 1, 0])
    assert not g.is_proper_coloring({1: 0})


def test_generators():
    assert complete_graph(4).edge_count == 6
    assert path_graph(4).edges() == [(1, 2), (2, 3), (3, 4)]
    assert cycle_graph(4).edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert empty_graph(3).edge_count == 0
    assert random_graph(8, 0.5, 1) == random_graph(8, 0.5, 1)
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_mycielski_of_k2_is_c5():
    assert nx.is_isomorphic(to_nx(mycielski(complete_graph(2))), to_nx(cycle_graph(5)))


def test_grotzsch():
    g = grotzsch_graph()
    assert (g.n, g.edge_count) == (11, 20)
    assert clique_number(g).omega == 2
    assert chromatic_number(g).chi == 4
    assert nx.is_isomorphic(to_nx(g), nx.mycielski_graph(4))


@pytest.mark.parametrize("seed", range(8))
def test_mycielski_counts_and_reference(seed):
    g = random_graph(2 + seed % 6, 0.4, seed)
    m = mycielski(g)
    assert m.n == 2 * g.n + 1
    assert m.edge_count == 3 * g.edge_count + g.n
    assert nx.is_isomorphic(to_nx(m), nx.mycielskian(to_nx(g)))


@pytest.mark.parametrize("seed", range(10))
def test_mycielski_raises_chi_by_one(seed):
    g = random_graph(3 + seed % 8, 0.5, 100 + seed)
    if g.edge_count == 0:
        g = complete_graph(2)
    assert chromatic_number(mycielski(g)).chi == chromatic_number(g).chi + 1


def test_mycielski_chain():
    assert mycielski_chain(0) == complete_graph(2)
    assert [mycielski_chain(t).n for t in (1, 2, 3)] == [5, 11, 23]
