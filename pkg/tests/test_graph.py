from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgedepth.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    delete_vertices,
    empty_graph,
    graph_from_edges,
    independence_number,
    induced_subgraph,
    is_connected,
    mask_of,
    max_minimal_vertex_cover,
    maximal_independent_sets,
    maximum_independent_set,
    path_graph,
    star_graph,
)

from oracles import (
    brute_alpha,
    brute_maximal_independent_sets,
    brute_minimal_covers,
    is_independent,
    labeled_graphs,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1 if nbits else 0))
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> k) & 1:
                edges.append((i, j))
            k += 1
    return graph_from_edges(n, edges)


def test_graph_from_edges_basics():
    K2 = graph_from_edges(2, [(0, 1)])
    assert K2.degree(0) == K2.degree(1) == 1
    assert graph_from_edges(3, []).edge_count == 0
    P4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert [P4.degree(v) for v in range(4)] == [1, 2, 2, 1]
    # duplicates collapse
    assert graph_from_edges(2, [(0, 1), (1, 0), (0, 1)]).edge_count == 1


def test_graph_from_edges_errors():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, (1, 2))  # loop at vertex 0


def test_graph_validates_symmetry():
    with pytest.raises(GraphError):
        Graph(2, (2, 0))


def test_induced_subgraph_examples():
    C5 = cycle_graph(5)
    H, relabel = induced_subgraph(C5, mask_of([0, 1, 2]))
    assert relabel == (0, 1, 2)
    assert sorted(H.edges()) == [(0, 1), (1, 2)]  # a 3-path

    K4 = complete_graph(4)
    H, _ = induced_subgraph(K4, mask_of([0, 2, 3]))
    assert H.edge_count == 3  # cliques are hereditary

    P4 = path_graph(4)
    H, _ = induced_subgraph(P4, mask_of([0, 3]))
    assert H.edge_count == 0

    H, relabel = induced_subgraph(C5, 0)
    assert H.n == 0 and relabel == ()


def test_induced_subgraph_full_is_identity():
    for G in [cycle_graph(5), path_graph(4), star_graph(3)]:
        H, relabel = induced_subgraph(G, G.vertex_mask)
        assert H == G
        assert relabel == tuple(range(G.n))


def test_is_connected():
    assert is_connected(complete_graph(2))
    assert not is_connected(graph_from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(empty_graph(1))
    assert is_connected(empty_graph(0))
    assert not is_connected(empty_graph(2))


def test_independence_number_examples():
    assert independence_number(star_graph(3)) == 3
    assert independence_number(complete_graph(4)) == 1
    assert independence_number(cycle_graph(5)) == brute_alpha(cycle_graph(5)) == 2
    assert independence_number(empty_graph(0)) == 0
    assert independence_number(empty_graph(5)) == 5


def test_maximum_independent_set_witness_is_independent():
    for G in [cycle_graph(7), star_graph(4), complete_graph(5), path_graph(6)]:
        w = maximum_independent_set(G)
        assert is_independent(G, w)
        assert w.bit_count() == brute_alpha(G)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_independence_number_matches_bruteforce(G):
    assert independence_number(G) == brute_alpha(G)


def test_maximal_independent_sets_examples():
    assert set(maximal_independent_sets(complete_graph(3))) == {1, 2, 4}
    assert set(maximal_independent_sets(path_graph(3))) == {0b010, 0b101}
    assert set(maximal_independent_sets(cycle_graph(4))) == {0b0101, 0b1010}


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_maximal_independent_sets_match_bruteforce(G):
    assert set(maximal_independent_sets(G)) == brute_maximal_independent_sets(G)


def test_max_minimal_vertex_cover_examples():
    assert max_minimal_vertex_cover(complete_graph(4))[0] == 3
    size, cover = max_minimal_vertex_cover(star_graph(3))
    assert size == 3 and cover == 0b1110  # the three leaves


def test_cover_complementation_bijection_exhaustive():
    for n in range(1, 6):
        for G in labeled_graphs(n):
            mis = brute_maximal_independent_sets(G)
            covers = brute_minimal_covers(G)
            assert {G.vertex_mask & ~w for w in mis} == covers
            size, cover = max_minimal_vertex_cover(G)
            assert cover in covers
            assert size == max(c.bit_count() for c in covers)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7), st.data())
def test_alpha_drops_by_at_most_one_on_vertex_deletion(G, data):
    if G.n == 0:
        return
    v = data.draw(st.integers(min_value=0, max_value=G.n - 1))
    a = independence_number(G)
    a_v = independence_number(delete_vertices(G, 1 << v))
    assert a_v in (a - 1, a)
