from __future__ import annotations

import pytest

from edgedepth.chordal import (
    NotChordalError,
    chordal_depth_recursive,
    chordal_pdim_cover,
    dim_recursion,
    find_peo,
    is_chordal,
    verify_elimination_ordering,
)
from edgedepth.graph import (
    complete_graph,
    cycle_graph,
    graph_from_edges,
    independence_number,
    max_minimal_vertex_cover,
    path_graph,
    star_graph,
)
from edgedepth.pairs import chordal_witness

from oracles import brute_is_chordal, labeled_graphs


def test_find_peo_examples():
    assert find_peo(cycle_graph(4)) is None  # smallest non-chordal graph
    peo = find_peo(complete_graph(4))
    assert peo is not None and verify_elimination_ordering(complete_graph(4), peo)
    assert find_peo(graph_from_edges(0, [])) == ()


def test_witness_peo_eliminates_independent_side_first():
    # W(5,2,3): labels 0,1 form the clique side, 2,3,4 the independent side;
    # the independent side first, then the clique, is a valid ordering.
    W = chordal_witness(5, 2, 3)
    assert verify_elimination_ordering(W, (2, 3, 4, 0, 1))
    assert find_peo(W) is not None


def test_peo_existence_matches_bruteforce_chordality(connected_upto_7):
    for n in range(2, 8):
        for G in connected_upto_7[n]:
            assert (find_peo(G) is not None) == brute_is_chordal(G)


def test_returned_peo_always_verifies(connected_upto_7):
    for n in range(2, 8):
        for G in connected_upto_7[n]:
            peo = find_peo(G)
            if peo is not None:
                assert verify_elimination_ordering(G, peo)


def test_dim_recursion_examples():
    assert dim_recursion(complete_graph(2), 0) == 1
    assert dim_recursion(star_graph(3), 1) == 3  # a leaf
    C5 = cycle_graph(5)
    assert all(dim_recursion(C5, v) == 2 for v in range(5))
    with pytest.raises(ValueError):
        dim_recursion(C5, 5)


def test_dim_recursion_equals_alpha_on_disconnected():
    for G in labeled_graphs(5):
        alpha = independence_number(G)
        for v in range(G.n):
            assert dim_recursion(G, v) == alpha


def test_depth_recursive_examples():
    for n in range(2, 7):
        assert chordal_depth_recursive(complete_graph(n)) == 1
    for m in range(1, 7):
        assert chordal_depth_recursive(star_graph(m)) == 1
    assert chordal_depth_recursive(path_graph(4)) == 2  # P4 is Cohen-Macaulay
    assert chordal_depth_recursive(path_graph(7)) == 3
    # cross-checked against the homology oracle in test_homology
    assert chordal_depth_recursive(chordal_witness(9, 3, 5)) == 3


def test_pdim_cover_examples():
    assert chordal_pdim_cover(complete_graph(4)) == 3
    for m in (2, 3, 5):
        assert chordal_pdim_cover(star_graph(m)) == m
    for (n, a, b) in [(5, 2, 3), (9, 3, 5), (12, 5, 6)]:
        assert chordal_pdim_cover(chordal_witness(n, a, b)) == n - a


def test_nonchordal_routes_fail_loudly():
    C4 = cycle_graph(4)
    with pytest.raises(NotChordalError):
        chordal_pdim_cover(C4)
    with pytest.raises(NotChordalError):
        chordal_depth_recursive(C4)
    assert not is_chordal(cycle_graph(5))


def test_two_chordal_routes_agree(chordal_upto_7):
    for n in range(2, 8):
        for G in chordal_upto_7[n]:
            assert chordal_depth_recursive(G) == G.n - max_minimal_vertex_cover(G)[0]


def test_staircase_inequality_for_chordal(chordal_upto_7):
    # b <= (n-b)(b-a+1) with a = depth, b = dim
    for n in range(2, 8):
        for G in chordal_upto_7[n]:
            a = chordal_depth_recursive(G)
            b = independence_number(G)
            assert b <= (G.n - b) * (b - a + 1)
