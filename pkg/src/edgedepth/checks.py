"""One-shot verification suite: every published-table and theorem-level fact
this package claims to reproduce, runnable via ``edgedepth check --paper``.

Each criterion returns a CheckResult; exactness is always hard-asserted,
wall-clock targets are reported but not asserted.  One check (the literal
head-of-a-PEO depth recursion identity) is a documented defect: the identity
it asks for is mathematically false, so it reports its counterexamples and
never passes; the corrected identity is checked (and passes) alongside.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .bouquet import (
    max_semi_strongly_disjoint_flowers,
    max_strongly_disjoint_flowers,
    validate_family,
)
from .canon import canonical_form
from .chordal import (
    chordal_depth_recursive,
    chordal_pdim_cover,
    dim_recursion,
    find_peo,
)
from .enumeration import cached_connected_graphs, labeled_connected_forms
from .graph import (
    Graph,
    bits,
    delete_vertices,
    graph_from_edges,
    independence_number,
    is_connected,
    max_minimal_vertex_cover,
)
from .graph6 import (
    Graph6AlphabetError,
    Graph6Error,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
    emit_graph6,
    parse_graph6,
)
from .homology import pdim_hochster
from .pairs import PairSet, chordal_witness, cminus, cprime, cstar, f_value
from .survey import compare, survey


@dataclass
class CheckResult:
    criterion: str
    passed: bool
    detail: str
    seconds: float
    known_defect: bool = False

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        tag = " [documented specification defect]" if self.known_defect else ""
        return f"{verdict}{tag}  {self.criterion} ({self.seconds:.1f}s): {self.detail}"


def _pairset(n: int, pairs: set[tuple[int, int]]) -> PairSet:
    return PairSet(n, frozenset(pairs))


# The gap sets outside the staircase region, per ambient vertex count.
REFERENCE_GAP_SETS: dict[int, set[tuple[int, int]]] = {
    2: set(), 3: set(), 4: set(), 5: set(), 6: set(),
    7: {(4, 5)},
    8: {(5, 6)},
    9: {(5, 7), (6, 7)},
    10: {(6, 7), (6, 8), (7, 8)},
    11: {(6, 9), (7, 8), (7, 9), (8, 9)},
    12: {(7, 10), (8, 9), (8, 10), (9, 10)},
    13: {(7, 11), (8, 9), (8, 10), (8, 11), (9, 10), (9, 11), (10, 11)},
}

# Extra staircase pairs beyond the inner region.  The published n=11 and
# n=12 tables list one additional pair each ((6,6) and (8,9)) that fails the
# defining inequality f >= 0 (and, for (8,9), is simultaneously listed in
# the n=12 gap set above); the sets here are the formula-consistent ones.
REFERENCE_EXTRA_OVER_INNER: dict[int, set[tuple[int, int]]] = {
    **{n: set() for n in (2, 3, 4, 5, 6, 7, 8, 10)},
    9: {(5, 6)},
    11: {(6, 7), (6, 8)},
    12: {(7, 8), (7, 9)},
}

KNOWN_ERRATUM_PAIRS = {(11, 6, 6), (12, 8, 9)}


def criterion_1_pair_tables() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    for n, want in REFERENCE_GAP_SETS.items():
        got = cprime(n).pairs
        if got != frozenset(want):
            problems.append(f"gap set n={n}: got {sorted(got)} want {sorted(want)}")
    for n, extra in REFERENCE_EXTRA_OVER_INNER.items():
        want = cminus(n) | _pairset(n, extra)
        if cstar(n) != want:
            problems.append(f"staircase decomposition n={n}")
    # the two published erratum pairs must fail the defining inequality
    for n, a, b in sorted(KNOWN_ERRATUM_PAIRS):
        if f_value(n, a, b) >= 0 or (a, b) in cstar(n):
            problems.append(f"erratum pair ({a},{b})@n={n} unexpectedly admitted")
    if (8, 9) not in cprime(12).pairs:
        problems.append("(8,9) missing from the n=12 gap set")
    detail = "; ".join(problems) if problems else (
        "gap sets n=2..13 and staircase decompositions n=2..12 match "
        "(published n=11/n=12 tables corrected per the defining inequality)"
    )
    return CheckResult("criterion 1: pair-set tables", not problems, detail, time.time() - start)


def criterion_2_survey_all(stretch: bool = False, progress: Callable[[str], None] | None = None) -> CheckResult:
    start = time.time()
    problems: list[str] = []
    tested = []
    top = 9 if stretch else 8
    for n in range(2, top + 1):
        res = survey(n, "all", source=cached_connected_graphs(n, "all"), progress=progress)
        rep = compare(res, cstar(n))
        tested.append(f"n={n}:{res.graphs_examined}g/{res.elapsed:.0f}s")
        if rep.status != "equal":
            problems.append(
                f"n={n}: realized != cstar (+{list(rep.only_in_result)} -{list(rep.only_in_target)})"
            )
    note = "" if stretch else "; n=9 stretch run SKIPPED (set EDGEDEPTH_STRETCH=1)"
    detail = "; ".join(problems) if problems else "realized = cstar for " + ", ".join(tested) + note
    return CheckResult("criterion 2: all-graphs survey", not problems, detail, time.time() - start)


def criterion_3_survey_chordal(progress: Callable[[str], None] | None = None) -> CheckResult:
    start = time.time()
    problems: list[str] = []
    tested = []
    for n in range(2, 10):
        res = survey(n, "chordal", source=cached_connected_graphs(n, "chordal"), progress=progress)
        rep = compare(res, cstar(n))
        tested.append(f"n={n}:{res.graphs_examined}g")
        if rep.status != "equal":
            problems.append(
                f"n={n}: realized != cstar (+{list(rep.only_in_result)} -{list(rep.only_in_target)})"
            )
    detail = "; ".join(problems) if problems else "realized = cstar for " + ", ".join(tested)
    return CheckResult("criterion 3: chordal survey", not problems, detail, time.time() - start)


def criterion_4_witness_suite() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    count = 0
    for n in range(2, 13):
        for b in range(1, n):
            for a in range(1, b + 1):
                if a + b > n:
                    continue
                count += 1
                W = chordal_witness(n, a, b)
                if not is_connected(W):
                    problems.append(f"W({n},{a},{b}) disconnected")
                    continue
                if find_peo(W) is None:
                    problems.append(f"W({n},{a},{b}) not chordal")
                    continue
                alpha = independence_number(W)
                pdim = chordal_pdim_cover(W)
                dep_rec = chordal_depth_recursive(W)
                if alpha != b:
                    problems.append(f"W({n},{a},{b}): dim {alpha} != {b}")
                if n - pdim != a or dep_rec != a:
                    problems.append(
                        f"W({n},{a},{b}): depth cover={n - pdim} rec={dep_rec} != {a}"
                    )
                if pdim != n - a:
                    problems.append(f"W({n},{a},{b}): pdim {pdim} != {n - a}")
    detail = "; ".join(problems[:5]) if problems else (
        f"{count} witness graphs (n <= 12, a+b <= n): connected, chordal, "
        "dim = b, depth = a by both chordal routes, pdim = n-a"
    )
    return CheckResult("criterion 4: witness constructions", not problems, detail, time.time() - start)


def criterion_5_oracle_agreement() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    count = 0
    for n in range(2, 9):
        for G in cached_connected_graphs(n, "chordal"):
            count += 1
            hochster = pdim_hochster(G)
            cover = max_minimal_vertex_cover(G)[0]
            recursion = G.n - chordal_depth_recursive(G)
            flowers, fam = max_semi_strongly_disjoint_flowers(G)
            if not hochster == cover == recursion == flowers:
                problems.append(
                    f"{emit_graph6(G)}: hochster={hochster} cover={cover} "
                    f"recursion={recursion} flowers={flowers}"
                )
            elif not validate_family(G, fam):
                problems.append(f"{emit_graph6(G)}: returned bouquet family invalid")
    detail = "; ".join(problems[:5]) if problems else (
        f"{count} connected chordal graphs n <= 8: homology = cover = "
        "n - recursion = semi-strongly-disjoint flowers"
    )
    return CheckResult("criterion 5: four-oracle agreement", not problems, detail, time.time() - start)


def criterion_6_bound_suites() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    count = 0
    for n in range(2, 8):
        for G in cached_connected_graphs(n, "all"):
            count += 1
            pdim = pdim_hochster(G)
            dim = independence_number(G)
            dep = G.n - pdim
            if any(G.degree(v) > pdim for v in range(G.n)):
                problems.append(f"{emit_graph6(G)}: degree bound violated")
            strong, fam = max_strongly_disjoint_flowers(G)
            if strong > pdim:
                problems.append(f"{emit_graph6(G)}: strong flowers {strong} > pdim {pdim}")
            if fam.bouquets and not validate_family(G, fam):
                problems.append(f"{emit_graph6(G)}: strong family invalid")
            if dep == dim and 2 * dim > G.n:
                problems.append(f"{emit_graph6(G)}: CM with dim > n/2")
            if dim == G.n - 1 and dep != 1:
                problems.append(f"{emit_graph6(G)}: dim = n-1 but depth {dep} != 1")
            if find_peo(G) is not None and dim > (G.n - dim) * (dim - dep + 1):
                problems.append(f"{emit_graph6(G)}: chordal staircase inequality violated")
    detail = "; ".join(problems[:5]) if problems else (
        f"{count} connected graphs n <= 7: degree <= pdim, strong flowers <= pdim, "
        "CM => dim <= n/2, dim = n-1 => depth = 1, chordal b <= (n-b)(b-a+1)"
    )
    return CheckResult("criterion 6: bound suites", not problems, detail, time.time() - start)


def _labeled_graphs(n: int):
    pair_list = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pair_list)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pair_list[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        yield Graph(n, tuple(adj))


def criterion_7_dim_recursion() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    count = 0
    for n in range(2, 8):
        for G in cached_connected_graphs(n, "all"):
            alpha = independence_number(G)
            for v in range(G.n):
                count += 1
                if dim_recursion(G, v) != alpha:
                    problems.append(f"{emit_graph6(G)} v={v}")
    for n in range(1, 6):  # labeled graphs cover disconnected inputs
        for G in _labeled_graphs(n):
            alpha = independence_number(G)
            for v in range(G.n):
                count += 1
                if dim_recursion(G, v) != alpha:
                    problems.append(f"labeled {G.adj} v={v}")
    detail = "; ".join(problems[:5]) if problems else (
        f"dim recursion = independence number at {count} (graph, vertex) pairs "
        "(connected n <= 7 and all labeled graphs n <= 5)"
    )
    return CheckResult("criterion 7a: dim recursion identity", not problems, detail, time.time() - start)


def _simplicial_vertices(G: Graph) -> list[int]:
    out = []
    for v in range(G.n):
        nb = G.adj[v]
        if all(nb & ~(1 << u) & ~G.adj[u] == 0 for u in bits(nb)):
            out.append(v)
    return out


def criterion_7_depth_recursion_literal() -> CheckResult:
    """Literal form: at EVERY valid elimination-ordering head h,
    min(depth(G-N[h])+1, depth(G-h)) should equal the cover-route depth.

    This identity is false; the check reports its counterexamples (the
    smallest is the 4-path) and is retained as a documented defect.
    """
    start = time.time()
    counterexamples: list[str] = []
    count = 0
    for n in range(2, 8):
        for G in cached_connected_graphs(n, "chordal"):
            truth = G.n - max_minimal_vertex_cover(G)[0]
            for h in _simplicial_vertices(G):  # exactly the valid PEO heads
                count += 1
                closed = chordal_depth_recursive(delete_vertices(G, G.closed_neighborhood(h))) + 1
                open_ = chordal_depth_recursive(delete_vertices(G, 1 << h))
                if min(closed, open_) != truth:
                    counterexamples.append(
                        f"{emit_graph6(G)} head={h}: min({closed},{open_}) != {truth}"
                    )
    passed = not counterexamples
    detail = (
        f"{count} (graph, head) pairs checked; identity holds everywhere"
        if passed
        else f"identity false at {len(counterexamples)}/{count} (graph, head) pairs, "
        f"first: {counterexamples[0]}"
    )
    return CheckResult(
        "criterion 7b (literal): head depth recursion",
        passed,
        detail,
        time.time() - start,
        known_defect=not passed,
    )


def criterion_7_depth_recursion_corrected() -> CheckResult:
    """Corrected form: every closed-neighborhood branch upper-bounds the
    depth and the minimum over all pivots attains it (chordal graphs)."""
    start = time.time()
    problems: list[str] = []
    count = 0
    for n in range(2, 8):
        for G in cached_connected_graphs(n, "chordal"):
            count += 1
            truth = G.n - max_minimal_vertex_cover(G)[0]
            branches = [
                chordal_depth_recursive(delete_vertices(G, G.closed_neighborhood(u))) + 1
                for u in range(G.n)
            ]
            if min(branches) != truth or any(b < truth for b in branches):
                problems.append(f"{emit_graph6(G)}")
            if chordal_depth_recursive(G) != truth:
                problems.append(f"{emit_graph6(G)}: recursive route disagrees")
    detail = "; ".join(problems[:5]) if problems else (
        f"{count} connected chordal graphs n <= 7: every pivot branch >= depth, "
        "min over pivots = depth = cover route"
    )
    return CheckResult(
        "criterion 7b (corrected): pivot depth recursion", not problems, detail, time.time() - start
    )


EXPECTED_CLASS_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def criterion_8_enumeration_counts() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    for n, want in EXPECTED_CLASS_COUNTS.items():
        got = len(cached_connected_graphs(n, "all"))
        if got != want:
            problems.append(f"n={n}: {got} classes, expected {want}")
    for n in range(2, 7):
        stream_forms = {canonical_form(G) for G in cached_connected_graphs(n, "all")}
        brute_forms = labeled_connected_forms(n)
        if stream_forms != brute_forms:
            problems.append(f"n={n}: stream forms differ from labeled brute force")
    detail = "; ".join(problems) if problems else (
        "class counts 1,2,6,21,112,853,11117 for n=2..8; "
        "labeled brute force agrees for n <= 6"
    )
    return CheckResult("criterion 8: enumeration counts", not problems, detail, time.time() - start)


MALFORMED_GRAPH6 = {
    "empty line": ("", Graph6HeaderError),
    "oversized header": ("~??", Graph6HeaderError),
    "alphabet": ("A\x1f", Graph6AlphabetError),
    "body too short": ("C", Graph6LengthError),
    "body too long": ("A__", Graph6LengthError),
    "padding": ("A~", Graph6PaddingError),
}


def criterion_9_graph6_codec() -> CheckResult:
    start = time.time()
    problems: list[str] = []
    count = 0
    for n in range(2, 7):
        for G in cached_connected_graphs(n, "all"):
            count += 1
            if parse_graph6(emit_graph6(G)) != G:
                problems.append(f"round-trip failed: {emit_graph6(G)}")
    for name, (text, exc) in MALFORMED_GRAPH6.items():
        try:
            parse_graph6(text)
            problems.append(f"malformed input accepted: {name}")
        except exc:
            pass
        except Graph6Error as got:
            problems.append(f"{name}: raised {type(got).__name__}, expected {exc.__name__}")
    detail = "; ".join(problems[:5]) if problems else (
        f"round-trip identity on {count} connected graphs n <= 6; "
        f"{len(MALFORMED_GRAPH6)} malformed classes rejected with typed errors"
    )
    return CheckResult("criterion 9: graph6 codec", not problems, detail, time.time() - start)


def run_paper_checks(
    stretch: bool = False, progress: Callable[[str], None] | None = None
) -> list[CheckResult]:
    """Run every criterion; deterministic order and output."""
    say = progress or (lambda _msg: None)
    results = []
    steps: list[Callable[[], CheckResult]] = [
        criterion_1_pair_tables,
        lambda: criterion_2_survey_all(stretch=stretch),
        criterion_3_survey_chordal,
        criterion_4_witness_suite,
        criterion_5_oracle_agreement,
        criterion_6_bound_suites,
        criterion_7_dim_recursion,
        criterion_7_depth_recursion_literal,
        criterion_7_depth_recursion_corrected,
        criterion_8_enumeration_counts,
        criterion_9_graph6_codec,
    ]
    for step in steps:
        result = step()
        say(result.line())
        results.append(result)
    return results
