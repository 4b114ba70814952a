import itertools

import networkx as nx
import pytest

from oracles import brute_cubic_graphs, nx_graph
from yutsis import errors
from yutsis.enumeration import _connected, enumerate_cubic
from yutsis.graph import are_isomorphic, build_graph, canonical_form

COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_counts(graphs, n):
    assert len(graphs[n]) == COUNTS[n]


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_matches_brute_force(graphs, n):
    brute = brute_cubic_graphs(n)
    assert len(brute) == len(graphs[n])
    for h in brute:
        assert sum(nx.is_isomorphic(h, nx_graph(g)) for g in graphs[n]) == 1


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_pairwise_non_isomorphic_small(graphs, n):
    for a, b in itertools.combinations(graphs[n], 2):
        assert not are_isomorphic(a, b)


@pytest.mark.parametrize("n", [12, 14])
def test_canonical_forms_unique(graphs, n):
    forms = {canonical_form(g).edges for g in graphs[n]}
    assert len(forms) == len(graphs[n])


def test_all_valid_and_connected(graphs):
    for n, gs in graphs.items():
        for g in gs:
            assert build_graph(n, g.edges) == g


def test_deterministic_order():
    first = enumerate_cubic(12)
    _connected.cache_clear()
    assert enumerate_cubic(12) == first
    assert first == sorted(first, key=lambda g: g.edges)


@pytest.mark.parametrize("n, exc", [(7, errors.OddVertexCount), (2, errors.TooSmall)])
def test_bad_n(n, exc):
    with pytest.raises(exc):
        enumerate_cubic(n)
