"""Exact clique and independent-set computations, and certified scans.

The central quantity is the clique/independent pair sum: the size of a
largest clique plus the size of a largest independent set.  Thresholds asking
"from which vertex count onward does every graph (or every edge colouring)
reach value n?" are settled by exhaustive scans that emit machine-checkable
certificates; small closed-form upper bounds accompany them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._parallel import chunk_ranges, run_chunks
from .certificates import (EXHAUSTIVE, WITNESS, SearchCertificate,
                           SearchResult, UndecidedError)
from .graphs import (ENUMERATION_CAP, BudgetError, EdgeColoring, Graph, bits,
                     coloring_count, labeled_graph_count, pair_count,
                     pair_table, write_graph6, _decode_adj)

# Per-probe instance budgets for the certified scans; the graph budget is the
# full n=7 exhaustion, the colouring budget keeps a single probe near a
# million instances.  Both can be raised per call up to the global cap.
DEFAULT_GRAPH_BUDGET = 1 << 21
DEFAULT_COLORING_BUDGET = 1 << 20

GRAPH_MODES = ("rprime", "ramsey")
COLORING_MODES = ("rprime_m", "ramsey_m")


# --- exact solvers ---------------------------------------------------------


def _color_bound(adj, cand: int) -> int:
    """Greedy-colouring class count: an upper bound on cliques inside cand."""
    rest = cand
    k = 0
    while rest:
        k += 1
        avail = rest
        while avail:
            low = avail & -avail
            rest ^= low
            avail = (avail ^ low) & ~adj[low.bit_length() - 1]
    return k


def _pivot(adj, cand: int) -> int:
    """Branch vertex: maximum degree within cand, ties to the lowest index."""
    best_v = -1
    best_d = -1
    m = cand
    while m:
        low = m & -m
        m ^= low
        v = low.bit_length() - 1
        d = (adj[v] & cand).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
    return best_v


def _omega(adj, cand: int) -> int:
    """Largest clique size inside the candidate mask, by branch and bound."""
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if size > best:
            best = size
        if not cand or size + _color_bound(adj, cand) <= best:
            return
        v = _pivot(adj, cand)
        expand(size + 1, cand & adj[v])
        rest = cand ^ (1 << v)
        if rest:
            expand(size, rest)

    expand(0, cand)
    return best


def _has_clique(adj, cand: int, k: int) -> bool:
    """Early-exit test for a clique of size k inside cand."""
    if k <= 0:
        return True
    if cand.bit_count() < k or _color_bound(adj, cand) < k:
        return False
    v = _pivot(adj, cand)
    if _has_clique(adj, cand & adj[v], k - 1):
        return True
    return _has_clique(adj, cand ^ (1 << v), k)


def clique_number(g: Graph) -> int:
    return _omega(g.adj, g.full_mask)


def independence_number(g: Graph) -> int:
    return _omega(g.complement().adj, g.full_mask)


def max_clique(g: Graph) -> tuple[int, int]:
    """(size, mask) of the lexicographically least maximum clique.

    Least by vertex list: among all maximum cliques, the one whose sorted
    vertex sequence is smallest.  Greedy reconstruction: walk vertices in
    ascending order and keep v whenever some maximum-size completion through
    v survives inside the remaining candidates.
    """
    return _lex_min_clique(g.adj, g.full_mask)


def max_independent_set(g: Graph) -> tuple[int, int]:
    """(size, mask) of the lexicographically least maximum independent set."""
    return _lex_min_clique(g.complement().adj, g.full_mask)


def _lex_min_clique(adj, full: int) -> tuple[int, int]:
    size = _omega(adj, full)
    chosen = 0
    cand = full
    need = size
    while need:
        for v in bits(cand):
            inside = cand & adj[v]
            if 1 + _omega(adj, inside) >= need:
                chosen |= 1 << v
                cand = inside
                need -= 1
                break
    return size, chosen


@dataclass(frozen=True)
class WitnessPair:
    """A clique mask ``a`` and an independent-set mask ``b`` of one graph."""

    a: int
    b: int

    @property
    def value(self) -> int:
        return self.a.bit_count() + self.b.bit_count()

    def validate(self, g: Graph) -> bool:
        return g.is_clique(self.a) and g.is_independent(self.b)

    def to_json_dict(self) -> dict:
        return {"a": sorted(bits(self.a)), "b": sorted(bits(self.b))}


def clique_indep_pair(g: Graph) -> WitnessPair:
    """Maximum clique plus maximum independent set, both lex-least."""
    return WitnessPair(max_clique(g)[1], max_independent_set(g)[1])


def pair_sum_value(g: Graph) -> int:
    """Clique number plus independence number, without witness extraction."""
    return clique_number(g) + independence_number(g)


def pair_sum_bruteforce(g: Graph) -> int:
    """Independent oracle: classify all 2^n vertex subsets directly.

    Dynamic programme over subsets (a set is a clique iff removing its lowest
    vertex leaves a clique fully adjacent to it), so no branch-and-bound code
    is shared with the primary solver.  Limited to n <= 16.
    """
    n = g.n
    if n > 16:
        raise ValueError(f"brute force classifies 2^n subsets; n={n} exceeds 16")
    adj = g.adj
    size = 1 << n
    is_cl = bytearray(size)
    is_ind = bytearray(size)
    is_cl[0] = is_ind[0] = 1
    best_cl = 0
    best_ind = 0
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        row = adj[low.bit_length() - 1]
        if is_cl[rest] and row & rest == rest:
            is_cl[s] = 1
            c = s.bit_count()
            if c > best_cl:
                best_cl = c
        if is_ind[rest] and not row & rest:
            is_ind[s] = 1
            c = s.bit_count()
            if c > best_ind:
                best_ind = c
    return best_cl + best_ind


@dataclass(frozen=True)
class WitnessFamily:
    """One monochromatic clique mask per colour of an edge colouring."""

    parts: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(p.bit_count() for p in self.parts)

    def validate(self, c: EdgeColoring) -> bool:
        if len(self.parts) != c.m:
            return False
        full = (1 << c.n) - 1
        for color, part in enumerate(self.parts):
            if part & ~full:
                return False
            rest = part
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                for u in bits(rest):
                    if c.color_of(v, u) != color:
                        return False
        return True

    def to_json_dict(self) -> dict:
        return {"parts": [sorted(bits(p)) for p in self.parts]}


def mono_clique_family(c: EdgeColoring) -> WitnessFamily:
    """A largest monochromatic clique in every colour class."""
    return WitnessFamily(tuple(max_clique(c.color_class(i))[1] for i in range(c.m)))


def family_sum_value(c: EdgeColoring) -> int:
    full = (1 << c.n) - 1
    return sum(_omega(c.color_class(i).adj, full) for i in range(c.m))


# --- certified exhaustive scans --------------------------------------------


@dataclass(frozen=True)
class CheckOutcome:
    """Verdict of one exhaustive scan plus its certificate."""

    ok: bool
    certificate: SearchCertificate


def check_universal(target: int, n_vertices: int, mode: str, m: int = 2,
                    threads: int = 1, budget: Optional[int] = None,
                    prune: bool = False) -> CheckOutcome:
    """Does every instance on ``n_vertices`` vertices reach ``target``?

    Modes: "rprime" (clique + independent pair sum), "ramsey" (a clique or an
    independent set of the target size), "rprime_m" (sum over colours of the
    largest monochromatic clique), "ramsey_m" (a monochromatic clique of
    target size).  Failures report the minimum-code instance.  ``prune``
    switches on complement pairing for the graph modes: both predicates are
    complement-invariant, and the least failing code is always its own orbit
    representative, so verdict and witness are unchanged.
    """
    if mode in GRAPH_MODES:
        if m != 2:
            raise ValueError(f"mode {mode!r} is two-colour only")
        total = labeled_graph_count(n_vertices)
        cap = DEFAULT_GRAPH_BUDGET if budget is None else budget
        worker = _scan_graph_chunk
        args = (mode, n_vertices, target, prune)
    elif mode in COLORING_MODES:
        if not 2 <= m <= 8:
            raise ValueError(f"colour count {m} outside 2..8")
        if prune:
            raise ValueError("complement pairing applies to graph modes only")
        total = coloring_count(n_vertices, m)
        cap = DEFAULT_COLORING_BUDGET if budget is None else budget
        worker = _scan_coloring_chunk
        args = (mode, n_vertices, m, target)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if target < 1:
        raise ValueError(f"target {target} must be positive")
    if total > min(cap, ENUMERATION_CAP):
        raise BudgetError(
            f"{mode} scan at n={n_vertices} needs {total} instances, over the budget"
        )

    results = run_chunks(worker, [args + rng for rng in chunk_ranges(total, threads)],
                         threads)
    scanned = sum(r[2] for r in results)
    fails = [(r[0], r[1]) for r in results if r[0] is not None]

    params = {"mode": mode, "target": target, "n_vertices": n_vertices}
    if mode in COLORING_MODES:
        params["m"] = m
    if prune:
        params["pruned"] = True

    if not fails:
        cert = SearchCertificate(EXHAUSTIVE, params, target, scanned_count=scanned)
        return CheckOutcome(True, cert)
    code, value = min(fails)
    if mode in GRAPH_MODES:
        cert = SearchCertificate(
            WITNESS, params, value,
            witness_graph6=write_graph6(Graph.from_code(n_vertices, code)),
        )
    else:
        cert = SearchCertificate(
            WITNESS, params, value,
            witness_coloring=EdgeColoring.from_code(n_vertices, m, code).to_text(),
        )
    return CheckOutcome(False, cert)


def _scan_graph_chunk(args) -> tuple[Optional[int], Optional[int], int]:
    """Scan graph codes [start, stop); return (first fail, its value, scanned)."""
    mode, n, target, prune, start, stop = args
    full = (1 << n) - 1
    emask = (1 << pair_count(n)) - 1
    # Memoize clique numbers so each graph/complement pair is solved once;
    # skipped for huge chunks to keep memory flat.
    memo: Optional[dict] = {} if stop - start <= (1 << 17) else None
    scanned = 0
    for code in range(start, stop):
        comp = emask ^ code
        if prune and comp < code:
            continue
        scanned += 1
        adj = _decode_adj(n, code)
        if mode == "rprime":
            if memo is not None:
                w = memo.get(code)
                if w is None:
                    w = _omega(adj, full)
                    memo[code] = w
                a = memo.get(comp)
                if a is None:
                    a = _omega(_complement_adj(adj, n, full), full)
                    memo[comp] = a
            else:
                w = _omega(adj, full)
                a = _omega(_complement_adj(adj, n, full), full)
            if w + a < target:
                return code, w + a, scanned
        else:
            if not _has_clique(adj, full, target):
                cadj = _complement_adj(adj, n, full)
                if not _has_clique(cadj, full, target):
                    value = max(_omega(adj, full), _omega(cadj, full))
                    return code, value, scanned
    return None, None, scanned


def _complement_adj(adj, n: int, full: int) -> list[int]:
    return [(full & ~row) & ~(1 << v) for v, row in enumerate(adj)]


def _scan_coloring_chunk(args) -> tuple[Optional[int], Optional[int], int]:
    """Scan colouring codes [start, stop); merge-compatible with graph scans."""
    mode, n, m, target, start, stop = args
    full = (1 << n) - 1
    table = pair_table(n)
    np = len(table)
    scanned = 0
    for code in range(start, stop):
        rows = [[0] * n for _ in range(m)]
        c = code
        for k in range(np):
            c, d = divmod(c, m)
            i, j = table[k]
            rows[d][i] |= 1 << j
            rows[d][j] |= 1 << i
        scanned += 1
        if mode == "rprime_m":
            value = sum(_omega(r, full) for r in rows)
            if value < target:
                return code, value, scanned
        else:
            if not any(_has_clique(r, full, target) for r in rows):
                value = max(_omega(r, full) for r in rows)
                return code, value, scanned
    return None, None, scanned


# --- threshold searches -----------------------------------------------------


def search_threshold(kind: str, target: int, m: int = 2, threads: int = 1,
                     budget: Optional[int] = None, prune: bool = False) -> SearchResult:
    """Least vertex count from which every instance reaches ``target``.

    Probes n_vertices = 1, 2, ... until a scan passes; passing is monotone
    upward (an induced subgraph argument), so the first pass is the
    threshold.  When the next probe would blow the instance budget, the
    "ramsey_m" kind falls back to its closed-form bound (exact=False, with
    the bracket recorded); every other kind raises UndecidedError carrying
    the best-known bracket.
    """
    if kind not in GRAPH_MODES + COLORING_MODES:
        raise ValueError(f"unknown search kind {kind!r}")
    per_probe = (DEFAULT_GRAPH_BUDGET if kind in GRAPH_MODES
                 else DEFAULT_COLORING_BUDGET) if budget is None else budget
    count = (lambda nv: labeled_graph_count(nv)) if kind in GRAPH_MODES \
        else (lambda nv: coloring_count(nv, m))

    params = {"kind": kind, "target": target}
    if kind in COLORING_MODES:
        params["m"] = m
    last_fail: Optional[SearchCertificate] = None
    nv = 1
    while nv <= 64 and count(nv) <= min(per_probe, ENUMERATION_CAP):
        outcome = check_universal(target, nv, kind, m=m, threads=threads,
                                  budget=per_probe, prune=prune)
        if outcome.ok:
            return SearchResult(kind, params, nv, True, (nv, nv),
                                lower=last_fail, upper=outcome.certificate)
        last_fail = outcome.certificate
        nv += 1

    high = _closed_form_bound(kind, target, m)
    if kind == "ramsey_m" and high is not None:
        return SearchResult(kind, params, high, False, (nv, high), lower=last_fail)
    raise UndecidedError(kind, params, nv, high, lower=last_fail)


def _closed_form_bound(kind: str, target: int, m: int) -> Optional[int]:
    if kind == "rprime" and target >= 2:
        return pair_sum_bound(target)
    if kind == "ramsey" and target >= 2:
        return two_color_ramsey_bound(target)
    if kind == "rprime_m" and target >= m:
        return family_sum_bound(m, target - m)
    if kind == "ramsey_m" and target >= 2:
        return multicolor_ramsey_bound(target, m)
    return None


# --- closed-form bounds ------------------------------------------------------


def two_color_ramsey_bound(n: int) -> int:
    """Upper bound 2^(2n-3) for the two-colour clique-or-independent threshold."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    return 1 << (2 * n - 3)


def multicolor_ramsey_bound(n: int, m: int) -> int:
    """Upper bound 1 + (m^(mn-2m+1) - 1)/(m - 1) for the m-colour threshold."""
    if n < 2 or m < 2:
        raise ValueError("defined for n >= 2 and m >= 2")
    return 1 + (m ** (m * n - 2 * m + 1) - 1) // (m - 1)


def pair_sum_bound(n: int) -> int:
    """Upper bound 2^(n-2) for the clique-plus-independent pair-sum threshold."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    return 1 << (n - 2)


def family_sum_bound(m: int, k: int) -> int:
    """Upper bound 1 + (m^k - 1)/(m - 1) for family sum m + k; k=0 gives 1."""
    if m < 2 or k < 0:
        raise ValueError("defined for m >= 2 and k >= 0")
    return 1 + (m**k - 1) // (m - 1)


@dataclass(frozen=True)
class BoundSet:
    """The four closed-form bounds evaluated at one (n, m)."""

    clique_or_independent: int
    multicolor: int
    pair_sum: int
    family_sum: Optional[int]


def bound_formulas(n: int, m: int = 2) -> BoundSet:
    """All closed-form bounds at (n, m); the family bound reads k = n - m."""
    return BoundSet(
        clique_or_independent=two_color_ramsey_bound(n),
        multicolor=multicolor_ramsey_bound(n, m),
        pair_sum=pair_sum_bound(n),
        family_sum=family_sum_bound(m, n - m) if n >= m else None,
    )
