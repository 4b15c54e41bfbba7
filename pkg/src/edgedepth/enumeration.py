"""Isomorph-free generation of connected (and connected chordal) graphs.

Generation is levelwise vertex augmentation: every connected graph on m+1
vertices arises from a connected graph on m vertices (delete a non-cut
vertex) by attaching a new vertex to a nonempty neighbor subset, so
extending every representative by every nonempty subset and deduplicating
by canonical form yields exactly one representative per isomorphism class.
Chordal mode filters children before deduplication; induced subgraphs of
chordal graphs stay chordal, so the same argument applies.
"""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_form
from .chordal import find_peo
from .graph import Graph, is_connected

MIN_N = 2
MAX_N = 9

GRAPH_CLASSES = ("all", "chordal")


def _check_args(n: int, graph_class: str) -> None:
    if graph_class not in GRAPH_CLASSES:
        raise ValueError(f"unknown graph class {graph_class!r}")
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"supported vertex counts are {MIN_N}..{MAX_N}, got {n}")


def _augment(parents: list[tuple[int, ...]], m: int, chordal_only: bool) -> list[tuple[int, ...]]:
    """All isomorphism classes on m+1 vertices grown from the parents on m."""
    children: dict[bytes, tuple[int, ...]] = {}
    new_bit = 1 << m
    for adj in parents:
        for subset in range(1, 1 << m):
            rows = list(adj)
            rest = subset
            while rest:
                low = rest & -rest
                rows[low.bit_length() - 1] |= new_bit
                rest ^= low
            rows.append(subset)
            child = Graph(m + 1, tuple(rows))
            if chordal_only and find_peo(child) is None:
                continue
            children.setdefault(canonical_form(child), tuple(rows))
    return list(children.values())


def connected_graphs(n: int, graph_class: str = "all") -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices, in a deterministic order."""
    _check_args(n, graph_class)
    chordal_only = graph_class == "chordal"
    level: list[tuple[int, ...]] = [(0,)]  # the single vertex
    for m in range(1, n):
        level = _augment(level, m, chordal_only)
    for adj in level:
        yield Graph(n, adj)


_cache: dict[tuple[int, str], tuple[Graph, ...]] = {}


def cached_connected_graphs(n: int, graph_class: str = "all") -> tuple[Graph, ...]:
    """Memoized materialization of the stream (shared by tests and checks)."""
    key = (n, graph_class)
    got = _cache.get(key)
    if got is None:
        got = tuple(connected_graphs(n, graph_class))
        _cache[key] = got
    return got


def labeled_connected_forms(n: int) -> set[bytes]:
    """Brute-force oracle: canonical forms of all connected graphs on n
    vertices by enumerating every labeled graph (2^(n choose 2) of them)."""
    pair_list = [(i, j) for i in range(n) for j in range(i + 1, n)]
    forms: set[bytes] = set()
    for mask in range(1 << len(pair_list)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pair_list[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        G = Graph(n, tuple(adj))
        if is_connected(G):
            forms.add(canonical_form(G))
    return forms
