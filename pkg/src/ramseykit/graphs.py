"""Labeled graphs and edge colorings on at most 64 vertices, as int bitsets.

A vertex set is a plain ``int`` with bit ``v`` set for vertex ``v``; a graph
stores one adjacency mask per vertex, so every neighbourhood query is a single
AND.  Vertex pairs are ordered column-major along the upper triangle,

    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), (0,4), ...

which is exactly the bit order of the graph6 format, so a graph's integer
``code`` doubles as its position in exhaustive enumerations and as the body of
its graph6 encoding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64
MAX_COLORS = 8
COLOR_LETTERS = "abcdefgh"

# Hard ceiling on the size of any exhaustive instance scan.
ENUMERATION_CAP = 1 << 40

# Full exhaustion over labeled graphs is only offered up to this many
# vertices (2^21 graphs at n=7); larger n must be sharded explicitly.
MAX_EXHAUSTIVE_GRAPH_VERTICES = 7


class BudgetError(RuntimeError):
    """An exhaustive enumeration or search would exceed its instance budget."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@functools.lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """All vertex pairs of an n-vertex graph in code bit order."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def pair_index(u: int, v: int) -> int:
    """Position of the edge {u, v} in the code bit order."""
    if u == v:
        raise ValueError("loops are not representable")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} names vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {{{v},{u}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u},{v}}} names a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        """Decode a graph from its position in the code bit order."""
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        np = pair_count(n)
        if code < 0 or code >> np:
            raise ValueError(f"code {code} outside 0..2^{np}-1")
        return cls(n, tuple(_decode_adj(n, code)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def code(self) -> int:
        """Integer whose bit k records the k-th pair, column-major."""
        c = 0
        for k, (i, j) in enumerate(pair_table(self.n)):
            if self.adj[i] >> j & 1:
                c |= 1 << k
        return c

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for (i, j) in pair_table(self.n) if self.adj[i] >> j & 1]

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced_subgraph(self, mask: int) -> "Graph":
        """Induced subgraph on ``mask``, relabeled 0..k-1 in increasing order."""
        if mask & ~self.full_mask:
            raise ValueError("selection names vertices outside the graph")
        if mask == 0:
            raise ValueError("empty vertex selection")
        sel = list(bits(mask))
        rows = [0] * len(sel)
        for a, u in enumerate(sel):
            row = self.adj[u]
            for b, v in enumerate(sel):
                if row >> v & 1:
                    rows[a] |= 1 << b
        return Graph(len(sel), tuple(rows))

    def is_clique(self, mask: int) -> bool:
        """True iff every two vertices of ``mask`` are adjacent (empty set: yes)."""
        if mask & ~self.full_mask:
            raise ValueError("selection names vertices outside the graph")
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if rest & ~self.adj[low.bit_length() - 1]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        """True iff no two vertices of ``mask`` are adjacent (empty set: yes)."""
        if mask & ~self.full_mask:
            raise ValueError("selection names vertices outside the graph")
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if rest & self.adj[low.bit_length() - 1]:
                return False
        return True


def _decode_adj(n: int, code: int) -> list[int]:
    """Adjacency rows for a graph code; shared by Graph and the raw scanners."""
    rows = [0] * n
    table = pair_table(n)
    k = 0
    c = code
    while c:
        if c & 1:
            i, j = table[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        c >>= 1
        k += 1
    return rows


def labeled_graph_count(n: int) -> int:
    return 1 << pair_count(n)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in code order.

    Full exhaustion is only offered for n <= 7; beyond that the caller must
    shard explicitly over ``graphs_in_code_range``.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    if n > MAX_EXHAUSTIVE_GRAPH_VERTICES:
        raise BudgetError(
            f"exhaustion over {labeled_graph_count(n)} graphs on {n} vertices "
            f"exceeds the n <= {MAX_EXHAUSTIVE_GRAPH_VERTICES} cap; shard explicitly"
        )
    return graphs_in_code_range(n, 0, labeled_graph_count(n))


def graphs_in_code_range(n: int, start: int, stop: int) -> Iterator[Graph]:
    """Graphs with start <= code < stop, ascending; the sharding entry point."""
    total = labeled_graph_count(n)
    if not 0 <= start <= stop <= total:
        raise ValueError(f"code range [{start}, {stop}) outside [0, {total})")
    for code in range(start, stop):
        yield Graph(n, tuple(_decode_adj(n, code)))


@dataclass(frozen=True)
class EdgeColoring:
    """Colouring of all pairs of a complete graph; colors[k] colours pair k."""

    n: int
    m: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if not 2 <= self.m <= MAX_COLORS:
            raise ValueError(f"colour count {self.m} outside 2..{MAX_COLORS}")
        if len(self.colors) != pair_count(self.n):
            raise ValueError("colour vector length does not match the pair count")
        for k, c in enumerate(self.colors):
            if not 0 <= c < self.m:
                raise ValueError(f"pair {k} has colour {c} outside 0..{self.m - 1}")

    @classmethod
    def from_code(cls, n: int, m: int, code: int) -> "EdgeColoring":
        """Decode base-m digits of ``code``, least significant digit = pair 0."""
        np = pair_count(n)
        total = m**np
        if not 0 <= code < total:
            raise ValueError(f"code {code} outside 0..{m}^{np}-1")
        digits = []
        c = code
        for _ in range(np):
            c, d = divmod(c, m)
            digits.append(d)
        return cls(n, m, tuple(digits))

    @property
    def code(self) -> int:
        c = 0
        for d in reversed(self.colors):
            c = c * self.m + d
        return c

    def color_of(self, u: int, v: int) -> int:
        return self.colors[pair_index(u, v)]

    def color_class(self, color: int) -> Graph:
        """The graph holding exactly the pairs of this colour."""
        if not 0 <= color < self.m:
            raise ValueError(f"colour {color} outside 0..{self.m - 1}")
        rows = [0] * self.n
        for k, c in enumerate(self.colors):
            if c == color:
                i, j = pair_table(self.n)[k]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return Graph(self.n, tuple(rows))

    def to_text(self) -> str:
        """Compact text form ``"<n>:<letters>"`` with colours a..h per pair."""
        return f"{self.n}:" + "".join(COLOR_LETTERS[c] for c in self.colors)

    @classmethod
    def from_text(cls, text: str, m: int) -> "EdgeColoring":
        head, sep, body = text.partition(":")
        if not sep:
            raise ValueError("expected '<n>:<letters>'")
        n = int(head)
        digits = tuple(_letter_color(ch, m) for ch in body)
        return cls(n, m, digits)


def _letter_color(ch: str, m: int) -> int:
    c = COLOR_LETTERS.find(ch)
    if c < 0 or c >= m:
        raise ValueError(f"colour letter {ch!r} outside the first {m} of '{COLOR_LETTERS}'")
    return c


def coloring_count(n: int, m: int) -> int:
    return m ** pair_count(n)


def enumerate_edge_colorings(n: int, m: int) -> Iterator[EdgeColoring]:
    """All m^(n(n-1)/2) colourings in code order, guarded by the global cap."""
    total = coloring_count(n, m)
    if total > ENUMERATION_CAP:
        raise BudgetError(
            f"exhaustion over {total} colourings exceeds the 2^40 cap; shard explicitly"
        )
    for code in range(total):
        yield EdgeColoring.from_code(n, m, code)


# --- graph6 ---------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    """Standard graph6 string (long size form for n >= 63)."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + (n >> 12)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    code = g.code
    np = pair_count(n)
    body = []
    for group in range(0, np, 6):
        val = 0
        for t in range(6):
            k = group + t
            bit = (code >> k) & 1 if k < np else 0
            val = (val << 1) | bit
        body.append(chr(63 + val))
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line; raises Graph6ParseError with a byte offset."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    data = []
    for pos, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6ParseError(f"character {ch!r} outside the graph6 alphabet", pos)
        data.append(o - 63)
    if data[0] == 63:  # '~': long size form
        if len(data) < 4:
            raise Graph6ParseError("truncated long-form size", len(s))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        at = 4
    else:
        n = data[0]
        at = 1
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} outside 1..{MAX_VERTICES}", 0)
    np = pair_count(n)
    need = (np + 5) // 6
    if len(data) - at < need:
        raise Graph6ParseError(f"body too short for {n} vertices", len(s))
    if len(data) - at > need:
        raise Graph6ParseError(f"trailing data after {n}-vertex body", at + need)
    code = 0
    for idx in range(need):
        val = data[at + idx]
        for t in range(6):
            if not (val >> (5 - t)) & 1:
                continue
            k = 6 * idx + t
            if k >= np:
                raise Graph6ParseError("nonzero padding bits", at + idx)
            code |= 1 << k
    return Graph(n, tuple(_decode_adj(n, code)))
