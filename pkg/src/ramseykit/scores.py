"""Scores of colour classes beyond clique size, with top-j aggregation.

Each colour class of an edge colouring spans a graph on all n vertices; a
score function assigns it the size of its largest clique, longest cycle, or
longest path (counted in vertices).  Aggregating the j best class scores
generalizes the monochromatic-clique family sum (clique score, j = m) and the
single-best-class threshold (j = 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from ._parallel import chunk_ranges, run_chunks
from .certificates import (EXHAUSTIVE, WITNESS, SearchCertificate,
                           SearchResult, UndecidedError)
from .exact import (DEFAULT_COLORING_BUDGET, CheckOutcome, _omega)
from .graphs import (ENUMERATION_CAP, BudgetError, EdgeColoring, bits,
                     coloring_count, pair_table)


class ScoreKind(str, enum.Enum):
    CLIQUE = "clique"
    CYCLE = "cycle"
    PATH = "path"


@dataclass(frozen=True)
class ScoreProfile:
    """Per-colour scores of one colouring, in colour order."""

    per_color: tuple[int, ...]

    def aggregate(self, j: int) -> int:
        """Sum of the j largest class scores."""
        if not 1 <= j <= len(self.per_color):
            raise ValueError(f"j={j} outside 1..{len(self.per_color)}")
        return sum(sorted(self.per_color, reverse=True)[:j])


def _longest_path(adj, full: int) -> int:
    """Vertices on a longest simple path; 1 for any nonempty vertex set."""
    best = 0

    def extend(v: int, visited: int, length: int):
        nonlocal best
        if length > best:
            best = length
        for u in bits(adj[v] & ~visited & full):
            extend(u, visited | (1 << u), length + 1)

    for v in bits(full):
        extend(v, 1 << v, 1)
    return best


def _longest_cycle(adj, full: int) -> int:
    """Vertices on a longest simple cycle; 0 when the graph is acyclic.

    Each cycle is found once, anchored at its minimum vertex: paths grow only
    through vertices above the anchor and score when they close back on it
    with length at least 3.
    """
    best = 0

    def extend(v: int, visited: int, length: int, anchor: int, above: int):
        nonlocal best
        if length >= 3 and adj[v] >> anchor & 1 and length > best:
            best = length
        for u in bits(adj[v] & ~visited & above):
            extend(u, visited | (1 << u), length + 1, anchor, above)

    for anchor in bits(full):
        above = full & ~((1 << (anchor + 1)) - 1)
        extend(anchor, 1 << anchor, 1, anchor, above)
    return best


def _score_rows(adj, full: int, kind: ScoreKind) -> int:
    if kind is ScoreKind.CLIQUE:
        return _omega(adj, full)
    if kind is ScoreKind.CYCLE:
        return _longest_cycle(adj, full)
    return _longest_path(adj, full)


def score_color_class(c: EdgeColoring, color: int, kind: ScoreKind) -> int:
    """Score of one colour class (its graph keeps all n vertices)."""
    kind = ScoreKind(kind)
    g = c.color_class(color)
    return _score_rows(g.adj, g.full_mask, kind)


def score_sum(c: EdgeColoring, kind: ScoreKind, j: int) -> tuple[int, ScoreProfile]:
    """Aggregate of the j best class scores, plus the full profile."""
    kind = ScoreKind(kind)
    profile = ScoreProfile(tuple(score_color_class(c, i, kind) for i in range(c.m)))
    return profile.aggregate(j), profile


def check_universal_score(target: int, n_vertices: int, kind: ScoreKind,
                          m: int = 2, j: int = 1, threads: int = 1,
                          budget: Optional[int] = None) -> CheckOutcome:
    """Does every m-colouring on ``n_vertices`` reach ``target`` with its j
    best class scores?  Failures report the minimum-code colouring."""
    kind = ScoreKind(kind)
    if not 2 <= m <= 8:
        raise ValueError(f"colour count {m} outside 2..8")
    if not 1 <= j <= m:
        raise ValueError(f"j={j} outside 1..{m}")
    if target < 1:
        raise ValueError(f"target {target} must be positive")
    total = coloring_count(n_vertices, m)
    cap = DEFAULT_COLORING_BUDGET if budget is None else budget
    if total > min(cap, ENUMERATION_CAP):
        raise BudgetError(
            f"score scan at n={n_vertices} needs {total} colourings, over the budget"
        )
    chunks = [(n_vertices, m, kind.value, j, target, lo, hi)
              for lo, hi in chunk_ranges(total, threads)]
    results = run_chunks(_scan_score_chunk, chunks, threads)
    scanned = sum(r[2] for r in results)
    fails = [(r[0], r[1]) for r in results if r[0] is not None]
    params = {"mode": "score", "score": kind.value, "j": j, "m": m,
              "target": target, "n_vertices": n_vertices}
    if not fails:
        cert = SearchCertificate(EXHAUSTIVE, params, target, scanned_count=scanned)
        return CheckOutcome(True, cert)
    code, value = min(fails)
    cert = SearchCertificate(
        WITNESS, params, value,
        witness_coloring=EdgeColoring.from_code(n_vertices, m, code).to_text(),
    )
    return CheckOutcome(False, cert)


def _scan_score_chunk(args):
    n, m, kind_value, j, target, start, stop = args
    kind = ScoreKind(kind_value)
    full = (1 << n) - 1
    table = pair_table(n)
    np = len(table)
    scanned = 0
    for code in range(start, stop):
        rows = [[0] * n for _ in range(m)]
        c = code
        for k in range(np):
            c, d = divmod(c, m)
            i, jj = table[k]
            rows[d][i] |= 1 << jj
            rows[d][jj] |= 1 << i
        scanned += 1
        scores = sorted((_score_rows(r, full, kind) for r in rows), reverse=True)
        if sum(scores[:j]) < target:
            return code, sum(scores[:j]), scanned
    return None, None, scanned


def search_threshold_score(kind: ScoreKind, m: int, j: int, target: int,
                           threads: int = 1, budget: Optional[int] = None
                           ) -> SearchResult:
    """Least vertex count from which every m-colouring reaches ``target``
    with its j best class scores; raises UndecidedError past the budget."""
    kind = ScoreKind(kind)
    per_probe = DEFAULT_COLORING_BUDGET if budget is None else budget
    params = {"kind": "score", "score": kind.value, "j": j, "m": m,
              "target": target}
    last_fail: Optional[SearchCertificate] = None
    nv = 1
    while nv <= 64 and coloring_count(nv, m) <= min(per_probe, ENUMERATION_CAP):
        outcome = check_universal_score(target, nv, kind, m=m, j=j,
                                        threads=threads, budget=per_probe)
        if outcome.ok:
            return SearchResult("score", params, nv, True, (nv, nv),
                                lower=last_fail, upper=outcome.certificate)
        last_fail = outcome.certificate
        nv += 1
    raise UndecidedError("score", params, nv, None, lower=last_fail)
