"""Exhaustive (depth, dim) surveys over graph streams and region comparison.

A survey folds the pair (depth, dim) over an isomorph-free stream of
connected graphs, keeping the first witness and a multiplicity per pair.
Long runs checkpoint to an append-only JSON-lines file and can resume.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .chordal import chordal_depth_cover, chordal_depth_recursive, find_peo
from .graph import Graph, independence_number
from .graph6 import emit_graph6, parse_graph6, read_graph6_lines
from .homology import pdim_hochster
from .pairs import PairSet, pair_table

CHECKPOINT_FLUSH_EVERY = 10_000


def analyze_pair(G: Graph, characteristic: int = 2, paranoid: bool = False) -> tuple[int, int]:
    """(depth, dim) of one graph: chordal fast path, homology otherwise."""
    b = independence_number(G)
    if find_peo(G) is not None:
        a = chordal_depth_cover(G)
        if paranoid:
            via_recursion = chordal_depth_recursive(G)
            via_homology = G.n - pdim_hochster(G, characteristic)
            if not a == via_recursion == via_homology:
                raise AssertionError(
                    f"depth oracles disagree on {emit_graph6(G)}: "
                    f"cover={a} recursion={via_recursion} homology={via_homology}"
                )
    else:
        a = G.n - pdim_hochster(G, characteristic)
    return a, b


@dataclass
class SurveyResult:
    """Realized pairs with witnesses and counts for one (n, class) run."""

    n: int
    graph_class: str
    characteristic: int
    realized: PairSet
    counts: dict[tuple[int, int], int]
    graphs_examined: int
    elapsed: float
    resumed_from_checkpoint: int = 0

    def to_json_dict(self) -> dict:
        out = self.realized.to_json_dict()
        out["schema"] = "edgedepth/survey/v1"
        out["graph_class"] = self.graph_class
        out["characteristic"] = self.characteristic
        out["counts"] = {f"{a},{b}": c for (a, b), c in sorted(self.counts.items())}
        out["graphs_examined"] = self.graphs_examined
        out["elapsed_seconds"] = round(self.elapsed, 3)
        out["resumed_from_checkpoint"] = self.resumed_from_checkpoint
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "SurveyResult":
        realized = PairSet.from_json_dict(data)
        counts = {}
        for key, c in data.get("counts", {}).items():
            a, b = (int(x) for x in key.split(","))
            counts[(a, b)] = int(c)
        return SurveyResult(
            n=int(data["n"]),
            graph_class=data.get("graph_class", "all"),
            characteristic=int(data.get("characteristic", 2)),
            realized=realized,
            counts=counts,
            graphs_examined=int(data.get("graphs_examined", 0)),
            elapsed=float(data.get("elapsed_seconds", 0.0)),
            resumed_from_checkpoint=int(data.get("resumed_from_checkpoint", 0)),
        )


def _load_checkpoint(path: str) -> list[dict]:
    records = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                if not {"g6", "a", "b"} <= rec.keys():
                    raise ValueError("missing keys")
                records.append(rec)
    except FileNotFoundError:
        return []
    except (json.JSONDecodeError, ValueError) as exc:
        raise ValueError(f"corrupt checkpoint {path}: {exc}") from exc
    return records


def survey(
    n: int,
    graph_class: str = "all",
    characteristic: int = 2,
    checkpoint: str | None = None,
    threads: int = 1,
    paranoid: bool = False,
    source: Iterable[Graph] | None = None,
    progress: Callable[[str], None] | None = None,
) -> SurveyResult:
    """Fold (depth, dim) over one representative per isomorphism class.

    ``source`` overrides the built-in generator with any graph stream (for
    example externally generated graph6 lines).  The checkpoint file stores
    one JSON line per analyzed graph and is replayed on resume; replay and
    generation order are deterministic, so witnesses are reproducible.
    """
    from .enumeration import connected_graphs

    start = time.time()
    counts: dict[tuple[int, int], int] = {}
    witnesses: dict[tuple[int, int], Graph] = {}
    seen_g6: set[str] = set()
    resumed = 0

    if checkpoint:
        for rec in _load_checkpoint(checkpoint):
            pair = (int(rec["a"]), int(rec["b"]))
            counts[pair] = counts.get(pair, 0) + 1
            witnesses.setdefault(pair, parse_graph6(rec["g6"]))
            seen_g6.add(rec["g6"])
        resumed = len(seen_g6)

    stream: Iterable[Graph] = source if source is not None else connected_graphs(n, graph_class)

    ckpt_fh = open(checkpoint, "a", encoding="utf-8") if checkpoint else None
    pending = 0
    examined = resumed
    try:
        for g6, (a, b) in _analyzed_stream(stream, n, characteristic, paranoid, threads, seen_g6):
            pair = (a, b)
            counts[pair] = counts.get(pair, 0) + 1
            witnesses.setdefault(pair, parse_graph6(g6))
            examined += 1
            if ckpt_fh:
                ckpt_fh.write(json.dumps({"g6": g6, "a": a, "b": b}) + "\n")
                pending += 1
                if pending >= CHECKPOINT_FLUSH_EVERY:
                    ckpt_fh.flush()
                    pending = 0
            if progress and examined % 1000 == 0:
                progress(f"n={n} {graph_class}: {examined} graphs analyzed")
    finally:
        if ckpt_fh:
            ckpt_fh.close()

    realized = PairSet(n, frozenset(counts), witnesses)
    return SurveyResult(
        n=n,
        graph_class=graph_class,
        characteristic=characteristic,
        realized=realized,
        counts=counts,
        graphs_examined=examined,
        elapsed=time.time() - start,
        resumed_from_checkpoint=resumed,
    )


def _analyze_g6(args: tuple[str, int, bool]) -> tuple[str, tuple[int, int]]:
    g6, characteristic, paranoid = args
    return g6, analyze_pair(parse_graph6(g6), characteristic, paranoid)


def _analyzed_stream(
    stream: Iterable[Graph],
    n: int,
    characteristic: int,
    paranoid: bool,
    threads: int,
    skip_g6: set[str],
) -> Iterator[tuple[str, tuple[int, int]]]:
    def todo() -> Iterator[str]:
        for G in stream:
            if G.n != n:
                raise ValueError(f"stream emitted a graph on {G.n} != {n} vertices")
            g6 = emit_graph6(G)
            if g6 in skip_g6:
                continue
            yield g6

    if threads <= 1:
        for g6 in todo():
            yield _analyze_g6((g6, characteristic, paranoid))
        return
    # Work items are graph6 strings so they pickle cheaply; map() preserves
    # stream order, keeping witnesses deterministic under any thread count.
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=threads) as pool:
        args = ((g6, characteristic, paranoid) for g6 in todo())
        yield from pool.map(_analyze_g6, args, chunksize=256)


EQUAL = "equal"
TARGET_SUBSET = "target-subset-of-result"
RESULT_SUBSET = "result-subset-of-target"
INCOMPARABLE = "incomparable"


@dataclass
class CompareReport:
    n: int
    status: str
    only_in_result: tuple[tuple[int, int], ...]
    only_in_target: tuple[tuple[int, int], ...]
    table: str

    def to_json_dict(self) -> dict:
        return {
            "schema": "edgedepth/compare/v1",
            "n": self.n,
            "status": self.status,
            "only_in_result": [list(p) for p in self.only_in_result],
            "only_in_target": [list(p) for p in self.only_in_target],
        }


def compare(result: SurveyResult | PairSet, target: PairSet) -> CompareReport:
    """Diff a survey's realized pairs against a target region.

    Table marks: ``*`` in both, ``+`` realized only, ``-`` target only.
    """
    realized = result.realized if isinstance(result, SurveyResult) else result
    if realized.n != target.n:
        raise ValueError(f"mismatched n: {realized.n} vs {target.n}")
    only_r = sorted(realized.pairs - target.pairs, key=lambda p: (p[1], p[0]))
    only_t = sorted(target.pairs - realized.pairs, key=lambda p: (p[1], p[0]))
    if not only_r and not only_t:
        status = EQUAL
    elif not only_t:
        status = TARGET_SUBSET
    elif not only_r:
        status = RESULT_SUBSET
    else:
        status = INCOMPARABLE
    marks = {p: "*" for p in realized.pairs & target.pairs}
    marks.update({p: "+" for p in only_r})
    marks.update({p: "-" for p in only_t})
    return CompareReport(
        n=realized.n,
        status=status,
        only_in_result=tuple(only_r),
        only_in_target=tuple(only_t),
        table=pair_table(realized.n, marks),
    )


def survey_from_graph6_file(
    path: str, n: int, graph_class: str = "all", **kwargs
) -> SurveyResult:
    """Survey over an external graph6 file instead of the generator."""
    with open(path, "r", encoding="utf-8") as fh:
        graphs = list(read_graph6_lines(fh))
    return survey(n, graph_class, source=graphs, **kwargs)
