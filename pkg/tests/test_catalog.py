import networkx as nx
import pytest

from boundpoly.catalog import (
    all_graphs,
    canonical_form,
    graph_from_mask,
    is_isomorphic,
    parse_catalog,
    random_graphs,
)
from boundpoly.graphs import Graph, complete_bipartite, cycle_graph, path_graph, prism_graph
from naive import to_nx


def test_all_graphs_counts_and_distinct():
    for n, count in [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)]:
        gs = list(all_graphs(n))
        assert len(gs) == count and len(set(gs)) == count


def test_isomorphism_classes_on_five_vertices():
    classes = {canonical_form(g) for g in all_graphs(5)}
    assert len(classes) == 34


def test_graph_from_mask():
    assert graph_from_mask(3, 0b111) == cycle_graph(3)
    assert graph_from_mask(3, 0) == Graph(3)


def test_random_graphs_seeded():
    a = random_graphs(7, 20, seed=3)
    assert a == random_graphs(7, 20, seed=3)
    assert a != random_graphs(7, 20, seed=4)
    assert all(g.n == 7 for g in a)


def test_isomorphism_against_networkx():
    gs = random_graphs(6, 30, seed=9)
    for g in gs[:10]:
        for h in gs:
            assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
    assert is_isomorphic(path_graph(4), path_graph(4).relabel([2, 0, 3, 1]))
    assert not is_isomorphic(complete_bipartite(3, 3), prism_graph())


def test_canonical_form_cap():
    with pytest.raises(ValueError):
        canonical_form(path_graph(10))


def test_parse_catalog():
    assert len(parse_catalog("n<=3")) == 1 + 2 + 8
    assert len(parse_catalog("n = 4")) == 64
    assert len(parse_catalog("n=7:15")) == 15
    for bad in ["n<5", "n<=8", "m=3", "n<=6:10"]:
        with pytest.raises(ValueError):
            parse_catalog(bad)
