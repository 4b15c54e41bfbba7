"""Closed-form (depth, dim) pair regions and explicit witness graphs.

For n vertices the candidate region is

    cstar(n) = {(a, b) : 1 <= a <= b <= n-1,  a <= b + 1 - ceil(b / (n-b))},

together with the simpler inner region cminus(n) and the gap set cprime(n).
The witness construction realizes any (a, b) with a + b <= n by a connected
chordal graph: a clique splitting into a pendant part and a complete join
onto an independent set.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .graph import Graph, bits, graph_from_edges, is_connected


def f_value(n: int, a: int, b: int) -> int:
    """Margin b + 1 - ceil(b/(n-b)) - a; nonnegative iff (a,b) is in cstar(n)."""
    if not 1 <= a <= b <= n - 1:
        raise ValueError(f"need 1 <= a <= b <= n-1, got (n,a,b)=({n},{a},{b})")
    return b + 1 - (-(-b // (n - b))) - a


@dataclass(frozen=True)
class PairSet:
    """A set of (depth, dim) pairs for a fixed ambient vertex count."""

    n: int
    pairs: frozenset[tuple[int, int]]
    witnesses: Mapping[tuple[int, int], Graph] | None = field(
        default=None, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        for a, b in self.pairs:
            if not 1 <= a <= b <= self.n - 1:
                raise ValueError(f"pair ({a},{b}) outside 1 <= a <= b <= {self.n - 1}")

    def _check(self, other: "PairSet") -> None:
        if self.n != other.n:
            raise ValueError(f"pair sets over different n: {self.n} vs {other.n}")

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.sorted_pairs())

    def __or__(self, other: "PairSet") -> "PairSet":
        self._check(other)
        return PairSet(self.n, self.pairs | other.pairs)

    def __sub__(self, other: "PairSet") -> "PairSet":
        self._check(other)
        return PairSet(self.n, self.pairs - other.pairs)

    def __and__(self, other: "PairSet") -> "PairSet":
        self._check(other)
        return PairSet(self.n, self.pairs & other.pairs)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs, key=lambda p: (p[1], p[0]))

    def table(self) -> str:
        return pair_table(self.n, {p: "*" for p in self.pairs})

    def to_json_dict(self) -> dict:
        from .graph6 import emit_graph6

        out: dict = {
            "schema": "edgedepth/pairs/v1",
            "n": self.n,
            "pairs": [[a, b] for a, b in self.sorted_pairs()],
        }
        if self.witnesses:
            out["witnesses"] = {
                f"{a},{b}": emit_graph6(g) for (a, b), g in sorted(self.witnesses.items())
            }
        return out

    @staticmethod
    def from_json_dict(data: dict) -> "PairSet":
        from .graph6 import parse_graph6

        witnesses = None
        if data.get("witnesses"):
            witnesses = {}
            for key, g6 in data["witnesses"].items():
                a, b = (int(x) for x in key.split(","))
                witnesses[(a, b)] = parse_graph6(g6)
        return PairSet(
            int(data["n"]),
            frozenset((int(a), int(b)) for a, b in data["pairs"]),
            witnesses,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def pair_table(n: int, marks: Mapping[tuple[int, int], str]) -> str:
    """Staircase table: one row per dim value (descending), one column per
    depth value, with the given mark in each occupied cell."""
    lines = ["dim\\dep " + " ".join(f"{a:>2}" for a in range(1, n))]
    for b in range(n - 1, 0, -1):
        cells = [f"{marks.get((a, b), '.'):>2}" for a in range(1, n)]
        lines.append(f"{b:>7} " + " ".join(cells))
    return "\n".join(lines)


def cstar(n: int) -> PairSet:
    """All pairs with nonnegative margin."""
    if n < 2:
        raise ValueError("cstar needs n >= 2")
    pairs = frozenset(
        (a, b)
        for b in range(1, n)
        for a in range(1, b + 1)
        if f_value(n, a, b) >= 0
    )
    return PairSet(n, pairs)


def cminus(n: int) -> PairSet:
    """(1, n-1) plus every pair with depth <= floor(n/2) and dim <= n-2."""
    if n < 2:
        raise ValueError("cminus needs n >= 2")
    pairs = {(1, n - 1)}
    for b in range(1, n - 1):
        for a in range(1, min(b, n // 2) + 1):
            pairs.add((a, b))
    return PairSet(n, frozenset(pairs))


def cprime(n: int) -> PairSet:
    """Strict pairs below the top two dim rows that fall outside cstar."""
    if n < 2:
        raise ValueError("cprime needs n >= 2")
    inside = cstar(n).pairs
    pairs = frozenset(
        (a, b)
        for b in range(2, n - 1)
        for a in range(1, b)
        if (a, b) not in inside
    )
    return PairSet(n, pairs)


def chordal_witness(n: int, a: int, b: int) -> Graph:
    """Connected chordal graph on n vertices with depth a and dim b.

    Requires a + b <= n.  Vertices 0..n-b-1 form a clique; the first a-1 of
    them get one pendant vertex each, and the remaining clique vertices are
    completely joined to the remaining b - a + 1 independent vertices.
    Labels n-b..n-1 are the independent side, so reversing the labels gives
    an elimination ordering.
    """
    if not 1 <= a <= b <= n - 1:
        raise ValueError(f"need 1 <= a <= b <= n-1, got (n,a,b)=({n},{a},{b})")
    if a + b > n:
        raise ValueError(
            f"construction needs a + b <= n, got a+b={a + b} > {n}"
        )
    m = n - b  # clique size
    edges: list[tuple[int, int]] = []
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((i, j))
    for i in range(1, a):  # pendant pairs u_i -- w_i
        edges.append((i - 1, m + i - 1))
    for j in range(a, m + 1):  # complete join of the tail of the clique
        for k in range(a, b + 1):
            edges.append((j - 1, m + k - 1))
    return graph_from_edges(n, edges)


def witness_search(
    n: int, a: int, b: int, source: Iterable[Graph], characteristic: int = 2
) -> Graph | None:
    """First graph in the stream realizing (depth, dim) = (a, b), if any."""
    from .graph import independence_number
    from .homology import depth

    if not 1 <= a <= b <= n - 1:
        raise ValueError(f"need 1 <= a <= b <= n-1, got (n,a,b)=({n},{a},{b})")
    for G in source:
        if G.n != n:
            continue
        if independence_number(G) != b:
            continue
        if depth(G, p=characteristic) == a:
            return G
    return None


def random_graph_hunt(
    n: int,
    a: int,
    b: int,
    seed: int = 0,
    attempts: int = 10_000,
    characteristic: int = 2,
) -> Graph | None:
    """Seeded randomized hunt for a connected graph with (depth, dim) = (a, b).

    Useful where exhaustion is out of reach; finding nothing proves nothing.
    """
    from .graph import independence_number
    from .homology import depth

    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(attempts):
        density = rng.uniform(0.15, 0.85)
        edges = [e for e in pairs if rng.random() < density]
        G = graph_from_edges(n, edges)
        if not is_connected(G):
            continue
        if independence_number(G) != b:
            continue
        if depth(G, p=characteristic) == a:
            return G
    return None
