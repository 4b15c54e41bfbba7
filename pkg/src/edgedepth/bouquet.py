"""Bouquet families and the two flower-count maximizations.

A bouquet is a star subgraph: a root plus flowers taken from its neighbors.
Families of pairwise vertex-disjoint bouquets come in two flavors:

  * strongly disjoint: one stem per bouquet can be chosen so the stems form
    an induced matching of the host graph (total flowers lower-bounds pdim);
  * semi-strongly disjoint: the roots form an independent set (for chordal
    hosts the maximum total flower count equals pdim).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits

STRONG = "strongly-disjoint"
SEMI = "semi-strongly-disjoint"


@dataclass(frozen=True)
class Bouquet:
    root: int
    flowers: int  # bitmask, nonempty, inside N(root)

    def vertex_mask(self) -> int:
        return self.flowers | (1 << self.root)


@dataclass(frozen=True)
class BouquetFamily:
    bouquets: tuple[Bouquet, ...]
    mode: str = SEMI

    def flower_mask(self) -> int:
        m = 0
        for b in self.bouquets:
            m |= b.flowers
        return m

    def root_mask(self) -> int:
        m = 0
        for b in self.bouquets:
            m |= 1 << b.root
        return m

    def flower_count(self) -> int:
        return self.flower_mask().bit_count()


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _find_stem_system(
    G: Graph, roots: list[int], flower_sets: list[int]
) -> list[int] | None:
    """One flower per bouquet so the stems form an induced matching of G,
    or None.  Exact backtracking, first solution in ascending order."""
    chosen: list[int] = []

    def rec(i: int, chosen_roots: int, chosen_flowers: int) -> bool:
        if i == len(roots):
            return True
        r = roots[i]
        if G.adj[r] & chosen_flowers:
            return False  # this root is adjacent to an already chosen stem
        banned = chosen_flowers | chosen_roots
        for z in bits(flower_sets[i]):
            zb = 1 << z
            if G.adj[z] & banned:
                continue  # flower would touch an earlier stem
            chosen.append(z)
            if rec(i + 1, chosen_roots | (1 << r), chosen_flowers | zb):
                return True
            chosen.pop()
        return False

    return chosen if rec(0, 0, 0) else None


def validate_family(G: Graph, fam: BouquetFamily) -> Validation:
    """Check every definitional invariant; the reason names the first failure."""
    if fam.mode not in (STRONG, SEMI):
        return Validation(False, "unknown-mode")
    if not fam.bouquets:
        return Validation(False, "empty-family")
    seen = 0
    for b in fam.bouquets:
        if not 0 <= b.root < G.n or (b.flowers & ~G.vertex_mask):
            return Validation(False, "vertex-out-of-range")
        if not b.flowers:
            return Validation(False, "bouquet-without-flowers")
        if (b.flowers >> b.root) & 1:
            return Validation(False, "root-among-flowers")
        if b.flowers & ~G.adj[b.root]:
            return Validation(False, "flower-not-adjacent-to-root")
        vm = b.vertex_mask()
        if vm & seen:
            return Validation(False, "bouquets-share-vertices")
        seen |= vm
    roots = fam.root_mask()
    for r in bits(roots):
        if G.adj[r] & roots:
            return Validation(False, "roots-not-independent")
    if fam.mode == STRONG:
        stems = _find_stem_system(
            G, [b.root for b in fam.bouquets], [b.flowers for b in fam.bouquets]
        )
        if stems is None:
            return Validation(False, "no-induced-matching-of-stems")
    return Validation(True)


def _independent_sets_nonempty(G: Graph):
    """All nonempty independent sets, ascending bitmask order."""
    adj = G.adj
    full = G.vertex_mask

    def rec(cand: int, chosen: int):
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            new = chosen | low
            yield new
            yield from rec(cand & ~adj[v], new)

    yield from rec(full, 0)


def _neighbors_of_set(G: Graph, roots: int) -> int:
    m = 0
    for r in bits(roots):
        m |= G.adj[r]
    return m & ~roots


def _distinct_flowers(G: Graph, roots: list[int]) -> list[int] | None:
    """System of distinct representatives (one private flower per root) via
    augmenting paths, or None when some roots must share every neighbor."""
    match: dict[int, int] = {}  # flower -> root index

    def augment(i: int, visited: set[int]) -> bool:
        for z in bits(G.adj[roots[i]]):
            if z in visited:
                continue
            visited.add(z)
            if z not in match or augment(match[z], visited):
                match[z] = i
                return True
        return False

    for i in range(len(roots)):
        if not augment(i, set()):
            return None
    chosen = [0] * len(roots)
    for z, i in match.items():
        chosen[i] = z
    return chosen


def _assemble_family(G: Graph, roots: list[int], seeds: list[int], mode: str) -> BouquetFamily:
    """Deterministic family realizing |N(roots)| flowers: seed each root
    with its reserved flower, then hand every remaining neighborhood vertex
    to its smallest adjacent root."""
    root_mask = 0
    for r in roots:
        root_mask |= 1 << r
    flowers = {r: 1 << z for r, z in zip(roots, seeds)}
    taken = root_mask
    for z in seeds:
        taken |= 1 << z
    for z in bits(_neighbors_of_set(G, root_mask) & ~taken):
        for r in roots:
            if (G.adj[r] >> z) & 1:
                flowers[r] |= 1 << z
                break
    return BouquetFamily(tuple(Bouquet(r, flowers[r]) for r in roots), mode)


def max_semi_strongly_disjoint_flowers(G: Graph) -> tuple[int, BouquetFamily]:
    """Maximum total flowers over semi-strongly disjoint families.

    For a fixed independent root set the best flower count is the size of
    its neighborhood, provided each root can keep a private flower; the
    scan is over all independent root sets in ascending bitmask order, so
    ties resolve to the lexicographically smallest roots.
    """
    best = 0
    best_roots: list[int] = []
    best_seeds: list[int] = []
    for roots in _independent_sets_nonempty(G):
        score = _neighbors_of_set(G, roots).bit_count()
        if score <= best:
            continue
        rlist = list(bits(roots))
        seeds = _distinct_flowers(G, rlist)
        if seeds is None:
            continue
        best, best_roots, best_seeds = score, rlist, seeds
    if not best_roots:
        return 0, BouquetFamily((), SEMI)
    return best, _assemble_family(G, best_roots, best_seeds, SEMI)


def max_strongly_disjoint_flowers(G: Graph) -> tuple[int, BouquetFamily]:
    """Maximum total flowers over strongly disjoint families (certified
    lower bound for pdim).  Same scan, but the root set must additionally
    admit a stem system forming an induced matching."""
    best = 0
    best_roots: list[int] = []
    best_seeds: list[int] = []
    for roots in _independent_sets_nonempty(G):
        score = _neighbors_of_set(G, roots).bit_count()
        if score <= best:
            continue
        rlist = list(bits(roots))
        stems = _find_stem_system(G, rlist, [G.adj[r] & ~roots for r in rlist])
        if stems is None:
            continue
        best, best_roots, best_seeds = score, rlist, stems
    if not best_roots:
        return 0, BouquetFamily((), STRONG)
    return best, _assemble_family(G, best_roots, best_seeds, STRONG)
