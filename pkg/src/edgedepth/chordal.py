"""Chordality recognition and the two fast depth/pdim routes for chordal graphs.

An elimination ordering is stored first-eliminated-first: for ``order[k]``,
its neighbors among ``order[k+1:]`` must form a clique.  Both routes convert
between depth and projective dimension through pdim + depth = n.
"""

from __future__ import annotations

from .canon import canonical_form
from .graph import (
    Graph,
    bits,
    components,
    delete_vertices,
    independence_number,
    induced_subgraph,
    max_minimal_vertex_cover,
)


class NotChordalError(ValueError):
    """A chordal-only route was handed a non-chordal graph."""


def verify_elimination_ordering(G: Graph, order: tuple[int, ...]) -> bool:
    """True iff eliminating the vertices in the given order always removes a
    vertex whose remaining neighbors form a clique."""
    if sorted(order) != list(range(G.n)):
        return False
    remaining = G.vertex_mask
    for v in order:
        remaining &= ~(1 << v)
        later = G.adj[v] & remaining
        for u in bits(later):
            if later & ~(1 << u) & ~G.adj[u]:
                return False
    return True


def find_peo(G: Graph) -> tuple[int, ...] | None:
    """Perfect elimination ordering via maximum cardinality search.

    Returns the ordering (first entry eliminated first) when the graph is
    chordal, ``None`` otherwise.  The candidate ordering is always verified
    against the clique condition, which is what certifies chordality.
    """
    n = G.n
    if n == 0:
        return ()
    weight = [0] * n
    unnumbered = G.vertex_mask
    picks: list[int] = []
    for _ in range(n):
        v = max(bits(unnumbered), key=lambda u: (weight[u], -u))
        picks.append(v)
        unnumbered &= ~(1 << v)
        for u in bits(G.adj[v] & unnumbered):
            weight[u] += 1
    order = tuple(reversed(picks))
    return order if verify_elimination_ordering(G, order) else None


def is_chordal(G: Graph) -> bool:
    return find_peo(G) is not None


def dim_recursion(G: Graph, v: int) -> int:
    """max(alpha(G - N[v]) + 1, alpha(G - v)); equals alpha(G) for every v."""
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph on {G.n} vertices")
    without_closed = delete_vertices(G, G.closed_neighborhood(v))
    without_v = delete_vertices(G, 1 << v)
    return max(independence_number(without_closed) + 1, independence_number(without_v))


def chordal_pdim_cover(G: Graph) -> int:
    """pdim of a chordal graph as the largest minimal vertex cover."""
    if find_peo(G) is None:
        raise NotChordalError("vertex-cover pdim formula requires a chordal graph")
    return max_minimal_vertex_cover(G)[0]


def chordal_depth_cover(G: Graph) -> int:
    return G.n - chordal_pdim_cover(G)


_depth_memo: dict[bytes, int] = {}


def clear_depth_memo() -> None:
    _depth_memo.clear()


def chordal_depth_recursive(G: Graph) -> int:
    """Depth of a chordal graph by closed-neighborhood elimination.

    For a connected chordal graph with at least one edge,

        depth(G) = min over vertices u of  depth(G - N[u]) + 1.

    Removing N(u) plus a maximum minimal cover of G - N[u] re-assembles a
    minimal cover of G, giving <= for every u; conversely the complement of
    a maximum minimal cover is nonempty, and any u in it attains equality.
    (Recursing only on the head of a perfect elimination ordering is NOT
    sound: on the 4-path every head is a leaf, where min(depth(G - N[v]) + 1,
    depth(G - v)) = 1 while the true depth is 2.)

    Induced subgraphs may be edgeless or disconnected: an edgeless graph
    on m vertices has depth m, and a disconnected graph has the sum of its
    component depths.  Results are memoized on canonical forms.
    """
    if G.n == 0:
        return 0
    if G.edge_count == 0:
        return G.n
    comps = components(G)
    if len(comps) > 1:
        return sum(chordal_depth_recursive(induced_subgraph(G, c)[0]) for c in comps)
    key = canonical_form(G)
    cached = _depth_memo.get(key)
    if cached is not None:
        return cached
    if find_peo(G) is None:
        raise NotChordalError("depth recursion requires a chordal graph")
    branches = {G.closed_neighborhood(u) for u in range(G.n)}
    result = min(
        chordal_depth_recursive(delete_vertices(G, closed)) + 1 for closed in branches
    )
    _depth_memo[key] = result
    return result
