"""Canonical labeling by color refinement plus individualization.

Two graphs get the same canonical form iff they are isomorphic.  The search
refines a vertex coloring to a stable partition, then branches on one
representative per twin class inside the first non-singleton cell; the
canonical form is the minimum adjacency bitstring over the explored leaves.
Twin collapsing keeps cliques, stars and other twin-heavy graphs linear
instead of factorial.
"""

from __future__ import annotations

from .graph import Graph, bits


def _refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    # 1-dimensional Weisfeiler-Leman: split cells by multisets of neighbor
    # colors until the partition is stable.  Color ids are assigned by sorted
    # signature, so they do not depend on the input labeling.
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        order = sorted(set(sigs))
        remap = {s: i for i, s in enumerate(order)}
        colors = [remap[s] for s in sigs]
        if len(order) == ncolors:
            return colors
        ncolors = len(order)


def _cells(colors: list[int], n: int) -> list[list[int]]:
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    # u, v are twins when N(u) \ {v} == N(v) \ {u}; swapping twins is an
    # automorphism, so only one branch per twin class is explored.
    reps: list[int] = []
    classes: list[int] = []
    for v in cell:
        placed = False
        for i, u in enumerate(reps):
            bu, bv = 1 << u, 1 << v
            if adj[u] & ~bv == adj[v] & ~bu:
                classes[i] += 1
                placed = True
                break
        if not placed:
            reps.append(v)
            classes.append(1)
    return reps


def _adjacency_key(adj: tuple[int, ...], perm: list[int]) -> int:
    # perm[i] = original vertex receiving new label i; key packs the upper
    # triangle row-major under the new labeling.
    n = len(perm)
    key = 0
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            key = (key << 1) | ((row >> perm[j]) & 1)
    return key


def _search(adj: tuple[int, ...], n: int, colors: list[int], best: list[int | None]) -> None:
    cells = _cells(colors, n)
    target = None
    for cell in cells:
        if len(cell) > 1:
            target = cell
            break
    if target is None:
        perm = [cell[0] for cell in cells]
        key = _adjacency_key(adj, perm)
        if best[0] is None or key < best[0]:
            best[0] = key
        return
    base = max(colors) + 1
    for v in _twin_representatives(adj, target):
        child = list(colors)
        child[v] = base
        _search(adj, n, _refine(adj, n, child), best)


def canonical_form(G: Graph) -> bytes:
    """Canonical form: equal bytes iff isomorphic graphs."""
    n = G.n
    if n == 0:
        return b"\x00"
    colors = _refine(G.adj, n, [0] * n)
    best: list[int | None] = [None]
    _search(G.adj, n, colors, best)
    key = best[0]
    assert key is not None
    nbits = n * (n - 1) // 2
    return bytes([n]) + key.to_bytes((nbits + 7) // 8 or 1, "big")


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and canonical_form(G) == canonical_form(H)
