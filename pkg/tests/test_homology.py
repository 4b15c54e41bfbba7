from __future__ import annotations

import pytest

from edgedepth.canon import canonical_form
from edgedepth.chordal import NotChordalError
from edgedepth.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    path_graph,
    star_graph,
)
from edgedepth.homology import (
    IndependenceComplex,
    depth,
    hochster_profile,
    pdim_hochster,
    reduced_betti,
)
from edgedepth.pairs import chordal_witness

from oracles import brute_pdim, brute_reduced_betti, labeled_graphs


def test_reduced_betti_examples():
    assert reduced_betti(IndependenceComplex(complete_graph(2)), 0) == 1
    assert reduced_betti(IndependenceComplex(cycle_graph(4)), 0) == 1
    assert reduced_betti(IndependenceComplex(cycle_graph(5)), 1) == 1
    assert reduced_betti(IndependenceComplex(cycle_graph(5)), 0) == 0


def test_reduced_betti_conventions():
    # complex on no vertices: a single (-1)-dimensional homology class
    assert reduced_betti(IndependenceComplex(empty_graph(0)), -1) == 1
    assert reduced_betti(IndependenceComplex(empty_graph(3)), -1) == 0
    assert reduced_betti(IndependenceComplex(empty_graph(3)), 0) == 0  # a simplex
    assert reduced_betti(IndependenceComplex(complete_graph(3)), 0) == 2
    assert reduced_betti(IndependenceComplex(complete_graph(2)), -2) == 0


def test_reduced_betti_rejects_nonprime_characteristic():
    K = IndependenceComplex(complete_graph(2))
    for p in (0, 1, 4, 6, 9):
        with pytest.raises(ValueError):
            reduced_betti(K, 0, p)
    with pytest.raises(ValueError):
        hochster_profile(complete_graph(2), 4)


def test_reduced_betti_matches_bruteforce():
    for G in [cycle_graph(5), cycle_graph(6), path_graph(5), star_graph(3),
              graph_from_edges(6, [(0, 1), (2, 3), (4, 5)])]:
        K = IndependenceComplex(G)
        for j in range(-1, 4):
            for p in (2, 3):
                assert reduced_betti(K, j, p) == brute_reduced_betti(G, G.vertex_mask, j, p)


def test_hochster_profile_examples():
    hp = hochster_profile(complete_graph(2))
    assert (hp.pdim, hp.depth) == (1, 1)
    assert hp.witnesses == ((0b11, 0, 1),)

    hp = hochster_profile(cycle_graph(4))
    assert (hp.pdim, hp.depth) == (3, 1)

    hp = hochster_profile(cycle_graph(5))
    assert (hp.pdim, hp.depth) == (3, 2)  # Cohen-Macaulay: depth = dim = 2


def test_hochster_profile_witnesses_are_maximizers():
    for G in [cycle_graph(5), path_graph(6), star_graph(4), complete_graph(5)]:
        hp = hochster_profile(G)
        assert hp.depth == G.n - hp.pdim
        assert hp.witnesses
        for sigma, j, betti in hp.witnesses:
            assert sigma.bit_count() - j - 1 == hp.pdim
            assert betti >= 1
            assert brute_reduced_betti(G, sigma, j, 2) == betti


def test_edgeless_and_empty_graphs():
    assert hochster_profile(empty_graph(0)).pdim == 0
    hp = hochster_profile(empty_graph(4))
    assert (hp.pdim, hp.depth) == (0, 4)
    assert hp.witnesses == ((0, -1, 1),)
    assert depth(empty_graph(4)) == 4


def test_pruned_scan_matches_unpruned_bruteforce():
    # all isomorphism classes on up to 5 vertices, disconnected included
    seen = set()
    for n in range(0, 6):
        for G in labeled_graphs(n):
            key = canonical_form(G)
            if key in seen:
                continue
            seen.add(key)
            want = brute_pdim(G, 2)
            assert pdim_hochster(G, 2) == want
            assert hochster_profile(G, 2).pdim == want


def test_depth_dispatch_examples():
    assert depth(star_graph(4)) == 1
    assert depth(cycle_graph(5)) == 2
    W = chordal_witness(12, 5, 6)
    assert depth(W, policy="auto") == 5
    assert depth(W, policy="hochster") == 5
    assert depth(W, policy="paranoid") == 5


def test_depth_policies():
    C4 = cycle_graph(4)
    assert depth(C4, policy="auto") == 1
    assert depth(C4, policy="hochster") == 1
    with pytest.raises(NotChordalError):
        depth(C4, policy="chordal")
    with pytest.raises(ValueError):
        depth(C4, policy="bogus")


def test_characteristic_32003_agrees_on_small_graphs():
    for G in [cycle_graph(5), path_graph(5), complete_graph(4), star_graph(3)]:
        assert pdim_hochster(G, 2) == pdim_hochster(G, 32003) == pdim_hochster(G, 3)


def test_degree_pruning_skips_nothing(connected_upto_7):
    # spot check at n = 6: profile pdim equals brute force on every class
    for G in connected_upto_7[6][::7]:
        assert hochster_profile(G).pdim == brute_pdim(G)
