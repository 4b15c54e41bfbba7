"""graph6 text encoding of simple graphs (short form, n <= 32).

Layout: one byte n + 63, then the upper adjacency triangle in column-major
order (pairs (0,1), (0,2), (1,2), (0,3), ...), packed big-endian into 6-bit
groups, each offset by 63.  Unused padding bits must be zero.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import MAX_VERTICES, Graph

_OFFSET = 63
_MAX_BYTE = 126


class Graph6Error(ValueError):
    """Base class for malformed graph6 input."""


class Graph6HeaderError(Graph6Error):
    """Missing, oversized or multi-byte length header."""


class Graph6AlphabetError(Graph6Error):
    """Byte outside the printable graph6 alphabet."""

class Graph6LengthError(Graph6Error):
    """Body length does not match the advertised vertex count."""


class Graph6PaddingError(Graph6Error):
    """Nonzero bits in the zero padding of the last group."""


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def emit_graph6(G: Graph) -> str:
    """Canonical graph6 line for a graph on at most 32 vertices."""
    if G.n > MAX_VERTICES:
        raise Graph6Error(f"graph too large for this codec: n={G.n}")
    out = [chr(G.n + _OFFSET)]
    acc = 0
    filled = 0
    for j in range(1, G.n):
        for i in range(j):
            acc = (acc << 1) | ((G.adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + _OFFSET))
                acc, filled = 0, 0
    if filled:
        out.append(chr((acc << (6 - filled)) + _OFFSET))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; strict about length, alphabet and padding."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6HeaderError("empty graph6 line")
    codes = []
    for ch in s:
        o = ord(ch)
        if not _OFFSET <= o <= _MAX_BYTE:
            raise Graph6AlphabetError(f"byte {o} outside graph6 alphabet")
        codes.append(o - _OFFSET)
    if codes[0] == ord("~") - _OFFSET:
        raise Graph6HeaderError(
            "multi-byte vertex counts (n > 62) exceed this codec's n <= 32"
        )
    n = codes[0]
    if n > MAX_VERTICES:
        raise Graph6HeaderError(f"vertex count {n} exceeds supported {MAX_VERTICES}")
    body = codes[1:]
    expected = (_pair_count(n) + 5) // 6
    if len(body) != expected:
        raise Graph6LengthError(
            f"expected {expected} body bytes for n={n}, got {len(body)}"
        )
    bitstream = 0
    for c in body:
        bitstream = (bitstream << 6) | c
    total_bits = 6 * len(body)
    pad = total_bits - _pair_count(n)
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    adj = [0] * n
    pos = total_bits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bitstream >> pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blanks and comments."""
    for line in lines:
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield parse_graph6(s)
