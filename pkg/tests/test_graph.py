import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquecover.graph import (EdgeListError, Graph, common_neighbors_in, count_cliques, enumerate_cliques,
                               format_edge_list, is_turan, max_clique, maximal_cliques, parse_edge_list,
                               turan_graph, turan_parts)
from oracles import brute_clique_number, brute_cliques, brute_maximal_cliques, multipartite_count


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph(0)
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b10, 0])


def test_turan_known_counts():
    assert count_cliques(turan_graph(8, 4), 4) == 16
    assert count_cliques(turan_graph(9, 4), 4) == 24
    assert count_cliques(turan_graph(12, 4), 4) == 81
    assert count_cliques(turan_graph(5, 4), 4) == 2
    assert turan_parts(6, 4) == [(0, 4), (1, 5), (2,), (3,)]
    with pytest.raises(ValueError):
        turan_graph(3, 4)


@pytest.mark.parametrize("n,t", [(n, t) for n in range(1, 13) for t in range(1, min(n, 5) + 1)])
def test_turan_counts_match_part_sizes(n, t):
    G = turan_graph(n, t)
    sizes = [len(p) for p in turan_parts(n, t)]
    assert max(sizes) - min(sizes) <= 1
    for k in range(1, t + 1):
        assert count_cliques(G, k) == multipartite_count(sizes, k)
    assert is_turan(G, t)


def test_is_turan_rejects_near_misses():
    G = turan_graph(8, 4)
    assert not is_turan(G.without_edge(0, 1), 4)
    assert not is_turan(turan_graph(8, 3), 4)
    assert is_turan(Graph.complete(3), 4)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_clique_routines_match_brute_force(G):
    for t in range(1, 5):
        assert enumerate_cliques(G, t) == brute_cliques(G, t)
        assert count_cliques(G, t) == len(brute_cliques(G, t))
    assert len(max_clique(G)) == brute_clique_number(G)
    assert maximal_cliques(G) == brute_maximal_cliques(G)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_max_clique_is_lexicographically_first(G):
    w = brute_clique_number(G)
    assert max_clique(G) == min(brute_cliques(G, w))


@settings(max_examples=100, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_closure_of_clique_is_clique(G, rnd):
    U = max_clique(G)
    W = rnd.choice(enumerate_cliques(G, 1) + enumerate_cliques(G, 2))
    mask = common_neighbors_in(G, U, W)
    together = [v for v in range(G.n) if mask >> v & 1] + list(W)
    assert G.is_clique(set(together))


def test_edge_list_round_trip_and_errors():
    G = turan_graph(7, 3)
    assert parse_edge_list(format_edge_list(G)) == G
    with pytest.raises(EdgeListError, match=":3: duplicate"):
        parse_edge_list("3\n0 1\n1 0\n")
    with pytest.raises(EdgeListError, match=":2: self loop"):
        parse_edge_list("3\n2 2\n")
    with pytest.raises(EdgeListError, match=":2: vertex out of range"):
        parse_edge_list("3\n0 5\n")


def test_complement_and_subgraph():
    rng = random.Random(3)
    G = Graph(7, [e for e in combinations(range(7), 2) if rng.random() < 0.5])
    assert G.complement().complement() == G
    assert G.num_edges() + G.complement().num_edges() == 21
    sub, labels = G.subgraph([1, 3, 5])
    for (i, u), (j, v) in combinations(enumerate(labels), 2):
        assert sub.has_edge(i, j) == G.has_edge(u, v)
