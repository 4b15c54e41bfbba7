"""Field-exact depth/pdim for arbitrary graphs via independence complexes.

For a graph G, pdim of S/I(G) is the largest |s| - j - 1 over vertex subsets
s and homological degrees j with nonzero reduced homology of the independence
complex of G[s] over GF(p).  Reduced homology conventions: the complex on no
vertices has H~_{-1} of rank 1; any nonempty complex has H~_{-1} = 0.

Two exact shortcuts keep the subset scan fast:
  * a subset whose induced subgraph has an isolated vertex gives a cone,
    hence no homology (skipped);
  * the rank of H~_0 is one less than the number of connected components of
    the complement of G[s], so no matrix work is needed for degree zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .chordal import chordal_depth_cover, chordal_depth_recursive, find_peo
from .graph import Graph, bits


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"field characteristic {p} is not prime")


@dataclass(frozen=True)
class IndependenceComplex:
    """Flag complex whose faces are the independent sets of a graph."""

    graph: Graph

    def faces(self, size: int) -> list[int]:
        """All independent sets of the given size, as ascending bitmasks."""
        return _independent_sets(self.graph.adj, self.graph.vertex_mask, size)

    def dimension(self) -> int:
        from .graph import independence_number

        return independence_number(self.graph) - 1


def _independent_sets(adj: tuple[int, ...], pool: int, size: int) -> list[int]:
    if size == 0:
        return [0]
    out: list[int] = []

    def rec(cand: int, chosen: int, need: int) -> None:
        if need == 0:
            out.append(chosen)
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if cand.bit_count() + 1 < need:
                return
            rec(cand & ~adj[v], chosen | low, need - 1)

    rec(pool, 0, size)
    return out


def _rank_gf2(columns: list[int]) -> int:
    basis: dict[int, int] = {}
    rank = 0
    for col in columns:
        x = col
        while x:
            h = x.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = x
                rank += 1
                break
            x ^= b
    return rank


def _rank_gfp(matrix: np.ndarray, p: int) -> int:
    m = matrix % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        pivots = np.nonzero(m[rank:, c])[0]
        if pivots.size == 0:
            continue
        r = rank + int(pivots[0])
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        hits = np.nonzero(m[:, c])[0]
        hits = hits[hits != rank]
        if hits.size:
            m[hits] = (m[hits] - np.outer(m[hits, c], m[rank])) % p
        rank += 1
        if rank == rows:
            break
    return rank


def _boundary_rank(upper: list[int], lower_index: dict[int, int], p: int) -> int:
    """Rank of the boundary map from faces ``upper`` to the indexed faces
    one size below."""
    if not upper or not lower_index:
        return 0
    if p == 2:
        cols = []
        for face in upper:
            col = 0
            rest = face
            while rest:
                low = rest & -rest
                rest ^= low
                col |= 1 << lower_index[face ^ low]
            cols.append(col)
        return _rank_gf2(cols)
    mat = np.zeros((len(lower_index), len(upper)), dtype=np.int64)
    for c, face in enumerate(upper):
        verts = list(bits(face))
        for i, v in enumerate(verts):
            sub = face ^ (1 << v)
            mat[lower_index[sub], c] = 1 if i % 2 == 0 else p - 1
    return _rank_gfp(mat, p)


def reduced_betti(K: IndependenceComplex, j: int, p: int = 2) -> int:
    """Rank of the j-th reduced homology group of the complex over GF(p)."""
    _require_prime(p)
    n = K.graph.n
    if j < -1:
        return 0
    if j == -1:
        return 1 if n == 0 else 0
    faces_j = K.faces(j + 1)
    if not faces_j:
        return 0
    if j == 0:
        rank_d0 = 1  # every vertex maps to the empty face
    else:
        lower = K.faces(j)
        rank_d0 = _boundary_rank(faces_j, {f: i for i, f in enumerate(lower)}, p)
    faces_above = K.faces(j + 2)
    rank_d1 = _boundary_rank(faces_above, {f: i for i, f in enumerate(faces_j)}, p)
    return len(faces_j) - rank_d0 - rank_d1


@dataclass(frozen=True)
class HomologyProfile:
    """pdim/depth of S/I(G) plus the witnessing (subset, degree) pairs."""

    n: int
    pdim: int
    depth: int
    witnesses: tuple[tuple[int, int, int], ...]  # (subset mask, degree j, betti)
    characteristic: int


def _complement_components(adj: tuple[int, ...], sub: int) -> int:
    count = 0
    left = sub
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                nxt |= sub & ~adj[v] & ~low
            frontier = nxt & ~comp
            comp |= frontier
        count += 1
        left &= ~comp
    return count


def _first_positive_homology(
    adj: tuple[int, ...], sub: int, p: int, floor_contribution: int
) -> tuple[int, int] | None:
    """Smallest degree j >= 1 with nonzero homology of Ind(G[sub]), as
    (j, betti), scanning upward and giving up once the contribution
    |sub| - j - 1 would drop below ``floor_contribution``."""
    s = sub.bit_count()
    faces = {1: _independent_sets(adj, sub, 1), 2: _independent_sets(adj, sub, 2)}
    ranks: dict[int, int] = {}

    def rank_of(j: int) -> int:
        # boundary map from faces of size j+1 down to size j
        got = ranks.get(j)
        if got is not None:
            return got
        upper = faces.setdefault(j + 1, _independent_sets(adj, sub, j + 1))
        lower = faces.setdefault(j, _independent_sets(adj, sub, j))
        r = _boundary_rank(upper, {f: i for i, f in enumerate(lower)}, p)
        ranks[j] = r
        return r

    j = 1
    while s - 1 - j >= floor_contribution:
        fj = faces.setdefault(j + 1, _independent_sets(adj, sub, j + 1))
        if not fj:
            return None
        betti = len(fj) - rank_of(j) - rank_of(j + 1)
        if betti:
            return j, betti
        j += 1
    return None


def _hochster_scan(G: Graph, p: int, collect: bool) -> tuple[int, list[tuple[int, int, int, int]]]:
    """Shared subset scan; returns (pdim, candidates) where candidates are
    (subset, j, betti, contribution) records when ``collect`` is set."""
    _require_prime(p)
    adj = G.adj
    n = G.n
    best = 0
    candidates: list[tuple[int, int, int, int]] = [(0, -1, 1, 0)] if collect else []
    if n and G.edge_count:
        best = G.max_degree()  # certified lower bound: a single bouquet
    verts = range(n)
    for s in range(1, n + 1):
        top = s - 1
        if top < best or (not collect and top <= best):
            continue
        for combo in combinations(verts, s):
            sub = 0
            for v in combo:
                sub |= 1 << v
            isolated = False
            for v in combo:
                if not adj[v] & sub:
                    isolated = True
                    break
            if isolated:
                continue
            cc = _complement_components(adj, sub)
            if cc > 1:
                # H~_0 has rank cc - 1, the largest possible contribution
                # at this size; without witness collection the rest of this
                # size cannot improve on it.
                if collect:
                    candidates.append((sub, 0, cc - 1, top))
                    best = max(best, top)
                    continue
                best = top
                break
            potential = s - 2
            if potential < best or (not collect and potential <= best):
                continue
            floor = best if collect else best + 1
            hit = _first_positive_homology(adj, sub, p, floor)
            if hit is None:
                continue
            j, betti = hit
            contribution = s - 1 - j
            if collect:
                candidates.append((sub, j, betti, contribution))
            best = max(best, contribution)
    return best, candidates


def hochster_profile(G: Graph, p: int = 2) -> HomologyProfile:
    """Exact pdim/depth over GF(p) with every maximizing (subset, degree)."""
    pdim, candidates = _hochster_scan(G, p, collect=True)
    witnesses = tuple(
        (sub, j, betti) for sub, j, betti, c in candidates if c == pdim
    )
    return HomologyProfile(G.n, pdim, G.n - pdim, witnesses, p)


def pdim_hochster(G: Graph, p: int = 2) -> int:
    """pdim only, with aggressive (still exact) pruning."""
    return _hochster_scan(G, p, collect=False)[0]


def depth(G: Graph, policy: str = "auto", p: int = 2) -> int:
    """Depth of S/I(G).

    policy:
      * ``auto``     - chordal fast path when available, else homology;
      * ``chordal``  - chordal route only (raises on non-chordal input);
      * ``hochster`` - homology always;
      * ``paranoid`` - on chordal inputs run both and insist they agree.
    """
    if policy not in {"auto", "chordal", "hochster", "paranoid"}:
        raise ValueError(f"unknown depth policy {policy!r}")
    chordal = find_peo(G) is not None
    if policy == "chordal" or (policy == "auto" and chordal):
        return chordal_depth_cover(G)
    if policy == "hochster" or not chordal:
        return G.n - pdim_hochster(G, p)
    # paranoid on a chordal graph: three independent routes must agree
    via_cover = chordal_depth_cover(G)
    via_recursion = chordal_depth_recursive(G)
    via_homology = G.n - pdim_hochster(G, p)
    if not via_cover == via_recursion == via_homology:
        raise AssertionError(
            f"depth oracles disagree: cover={via_cover} "
            f"recursion={via_recursion} homology={via_homology}"
        )
    return via_cover
