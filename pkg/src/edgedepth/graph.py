"""Bitset-backed simple graphs and the independence/cover primitives.

Vertices are 0..n-1 and every vertex set is an int bitmask, so the whole
graph fits in a handful of machine words and set algebra is `&`, `|`, `~`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 32


class GraphError(ValueError):
    """Malformed graph construction (bad vertex, loop, asymmetry)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``adj[v]`` is the neighbor bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency of vertex {v} uses bits >= n")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric edge {{{v},{u}}}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for u in bits(row):
                out.append((v, v + 1 + u))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicates collapse."""
    if n < 0:
        raise GraphError("negative vertex count")
    adj = [0] * n
    for i, j in edges:
        if i == j:
            raise GraphError(f"loop {{{i},{i}}} not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge {{{i},{j}}} out of range for n={n}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def induced_subgraph(G: Graph, sub: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the bitmask ``sub``.

    Returns the relabeled graph together with the relabeling map: entry ``i``
    of the map is the original vertex now called ``i`` (original order kept).
    """
    keep = [v for v in bits(sub)]
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        row = G.adj[v] & sub
        for u in bits(row):
            adj[i] |= 1 << index[u]
    return Graph(len(keep), tuple(adj)), tuple(keep)


def delete_vertices(G: Graph, drop: int) -> Graph:
    """Graph with the masked vertices removed (relabeled to 0..)."""
    return induced_subgraph(G, G.vertex_mask & ~drop)[0]


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == G.vertex_mask


def components(G: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    out = []
    left = G.vertex_mask
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & left & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def _greedy_cover_bound(adj: tuple[int, ...], pool: int) -> int:
    # Upper bound on the independence number of the pool: size of a greedy
    # clique cover (each clique meets an independent set at most once).
    count = 0
    while pool:
        v = (pool & -pool).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & pool
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= adj[u]
        pool &= ~clique
        count += 1
    return count


def maximum_independent_set(G: Graph) -> int:
    """One maximum independent set, as a bitmask (branch and bound, exact)."""
    adj = G.adj
    best_mask = 0
    best_size = 0

    def expand(pool: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        if size > best_size:
            best_size = size
            best_mask = chosen
        if not pool:
            return
        if size + _greedy_cover_bound(adj, pool) <= best_size:
            return
        # branch on a max-degree-in-pool vertex: in or out
        v = max(bits(pool), key=lambda u: (adj[u] & pool).bit_count())
        bit = 1 << v
        expand(pool & ~adj[v] & ~bit, chosen | bit, size + 1)
        expand(pool & ~bit, chosen, size)

    expand(G.vertex_mask, 0, 0)
    return best_mask


def independence_number(G: Graph) -> int:
    """alpha(G), the size of a maximum independent set."""
    return maximum_independent_set(G).bit_count()


def maximal_independent_sets(G: Graph) -> Iterator[int]:
    """All inclusion-maximal independent sets (Bron-Kerbosch with pivoting
    on the complement graph), each exactly once."""
    full = G.vertex_mask
    # complement adjacency: non-neighbors other than self
    cadj = tuple(full & ~G.adj[v] & ~(1 << v) for v in range(G.n))

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (cadj[u] & p).bit_count())
        cand = p & ~cadj[pivot]
        for v in bits(cand):
            bit = 1 << v
            yield from bk(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    if G.n == 0:
        yield 0
        return
    yield from bk(0, full, 0)


def max_minimal_vertex_cover(G: Graph) -> tuple[int, int]:
    """(size, witness) of a largest minimal vertex cover.

    Minimal vertex covers are exactly complements of maximal independent
    sets, so this is n minus the smallest maximal independent set.
    """
    best = None
    for w in maximal_independent_sets(G):
        if best is None or w.bit_count() < best.bit_count():
            best = w
    assert best is not None
    cover = G.vertex_mask & ~best
    return cover.bit_count(), cover
