"""Brute-force oracles, deliberately independent of the library's algorithms.

Everything here enumerates: subsets for independence and covers, permutations
for isomorphism, full boundary matrices (dense, fraction-free elimination
mod p) for homology, and the unpruned all-subsets scan for pdim.
"""

from __future__ import annotations

from itertools import combinations, permutations

from edgedepth.graph import Graph


def subsets(n: int):
    for mask in range(1 << n):
        yield mask


def members(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if (mask >> v) & 1]


def is_independent(G: Graph, mask: int) -> bool:
    vs = members(mask)
    return all(not G.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def brute_alpha(G: Graph) -> int:
    return max(
        (mask.bit_count() for mask in subsets(G.n) if is_independent(G, mask)),
        default=0,
    )


def brute_maximal_independent_sets(G: Graph) -> set[int]:
    ind = [m for m in subsets(G.n) if is_independent(G, m)]
    ind_set = set(ind)
    out = set()
    for m in ind:
        if all((m | (1 << v)) not in ind_set for v in range(G.n) if not (m >> v) & 1):
            out.add(m)
    return out


def is_cover(G: Graph, mask: int) -> bool:
    return all((mask >> i) & 1 or (mask >> j) & 1 for i, j in G.edges())


def brute_minimal_covers(G: Graph) -> set[int]:
    covers = [m for m in subsets(G.n) if is_cover(G, m)]
    out = set()
    for m in covers:
        if all(not is_cover(G, m & ~(1 << v)) for v in members(m)):
            out.add(m)
    return out


def brute_is_chordal(G: Graph) -> bool:
    """No induced cycle of length >= 4, by checking every vertex subset."""
    for size in range(4, G.n + 1):
        for combo in combinations(range(G.n), size):
            degs = []
            for v in combo:
                d = sum(1 for u in combo if u != v and G.has_edge(u, v))
                degs.append(d)
            if any(d != 2 for d in degs):
                continue
            # 2-regular induced subgraph: a cycle iff connected
            seen = {combo[0]}
            frontier = [combo[0]]
            while frontier:
                v = frontier.pop()
                for u in combo:
                    if u not in seen and G.has_edge(u, v):
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == size:
                return False
    return True


def brute_canonical_key(G: Graph):
    """Minimum adjacency bitstring over all n! relabelings."""
    best = None
    for perm in permutations(range(G.n)):
        key = 0
        for i in range(G.n):
            for j in range(i + 1, G.n):
                key = (key << 1) | (1 if G.has_edge(perm[i], perm[j]) else 0)
        if best is None or key < best:
            best = key
    return (G.n, best)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col] % p, p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] % p:
                factor = m[r][col] % p
                m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _faces_of_size(G: Graph, inside: int, size: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations(members(inside), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if is_independent(G, mask):
            out.append(combo)
    return out


def brute_reduced_betti(G: Graph, inside: int, j: int, p: int = 2) -> int:
    """Reduced Betti number of the independence complex of G[inside]."""
    if j < -1:
        return 0
    if j == -1:
        return 1 if inside == 0 else 0
    faces_j = _faces_of_size(G, inside, j + 1)
    if not faces_j:
        return 0
    if j == 0:
        rank_down = 1
    else:
        lower = {f: i for i, f in enumerate(_faces_of_size(G, inside, j))}
        rows = [[0] * len(faces_j) for _ in lower]
        for c, face in enumerate(faces_j):
            for i in range(len(face)):
                sub = face[:i] + face[i + 1 :]
                rows[lower[sub]][c] = (-1) ** i
        rank_down = _rank_mod_p(rows, p)
    upper = _faces_of_size(G, inside, j + 2)
    if upper:
        index = {f: i for i, f in enumerate(faces_j)}
        rows = [[0] * len(upper) for _ in faces_j]
        for c, face in enumerate(upper):
            for i in range(len(face)):
                sub = face[:i] + face[i + 1 :]
                rows[index[sub]][c] = (-1) ** i
        rank_up = _rank_mod_p(rows, p)
    else:
        rank_up = 0
    return len(faces_j) - rank_down - rank_up


def brute_pdim(G: Graph, p: int = 2) -> int:
    """Unpruned all-subsets, all-degrees scan."""
    best = 0
    for sigma in subsets(G.n):
        s = sigma.bit_count()
        for j in range(-1, s + 1):
            if brute_reduced_betti(G, sigma, j, p):
                best = max(best, s - j - 1)
    return best


def labeled_graphs(n: int):
    pair_list = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pair_list)):
        adj = [0] * n
        for k, (i, j) in enumerate(pair_list):
            if (mask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))
