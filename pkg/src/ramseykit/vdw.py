"""Monochromatic arithmetic progressions in colourings of {1, ..., N}.

The quantity mirroring the clique/independent pair sum is the sum over
colours of the longest monochromatic arithmetic progression.  Thresholds
("from which interval length onward does every m-colouring have AP lengths
summing to n?") are settled by exhaustive scans with certificates, alongside
the classical single-colour check.

Positions are bitmasks, and an AP chain is grown by one term per step with
``cur &= cur >> d``: after k steps, set bits mark the starts of (k+1)-term
progressions of difference d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from ._parallel import chunk_ranges, run_chunks
from .certificates import (EXHAUSTIVE, WITNESS, SearchCertificate,
                           SearchResult, UndecidedError)
from .exact import CheckOutcome
from .graphs import ENUMERATION_CAP, COLOR_LETTERS, BudgetError

# One scan of every m-colouring of an N-interval touches m^N instances.
DEFAULT_INTERVAL_BUDGET = 1 << 26

MAX_INTERVAL_COLORS = 8


@dataclass(frozen=True)
class IntervalColoring:
    """Colouring of the integers 1..N; ``colors[i]`` colours i + 1."""

    m: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.m <= MAX_INTERVAL_COLORS:
            raise ValueError(f"colour count {self.m} outside 1..{MAX_INTERVAL_COLORS}")
        if not self.colors:
            raise ValueError("the interval must be nonempty")
        for i, c in enumerate(self.colors):
            if not 0 <= c < self.m:
                raise ValueError(f"position {i + 1} has colour {c} outside 0..{self.m - 1}")

    @property
    def length(self) -> int:
        return len(self.colors)

    @classmethod
    def from_code(cls, m: int, length: int, code: int) -> "IntervalColoring":
        """Decode base-m digits, least significant digit = position 1."""
        total = m**length
        if not 0 <= code < total:
            raise ValueError(f"code {code} outside 0..{m}^{length}-1")
        digits = []
        c = code
        for _ in range(length):
            c, d = divmod(c, m)
            digits.append(d)
        return cls(m, tuple(digits))

    @property
    def code(self) -> int:
        c = 0
        for d in reversed(self.colors):
            c = c * self.m + d
        return c

    def positions(self, color: int) -> int:
        """Bitmask of the positions (bit i = integer i + 1) of one colour."""
        if not 0 <= color < self.m:
            raise ValueError(f"colour {color} outside 0..{self.m - 1}")
        mask = 0
        for i, c in enumerate(self.colors):
            if c == color:
                mask |= 1 << i
        return mask

    def to_text(self) -> str:
        return "".join(COLOR_LETTERS[c] for c in self.colors)

    @classmethod
    def from_text(cls, text: str, m: int) -> "IntervalColoring":
        """Parse letters a..h; two-colour strings may use 'b'/'w' instead
        (black = colour 0, white = colour 1), recognized by a 'w' present."""
        s = text.strip()
        if m <= 2 and "w" in s:
            table = {"b": 0, "w": 1}
        else:
            table = {ch: i for i, ch in enumerate(COLOR_LETTERS[:m])}
        digits = []
        for i, ch in enumerate(s):
            if ch not in table:
                raise ValueError(f"colour letter {ch!r} at position {i + 1}")
            digits.append(table[ch])
        return cls(m, tuple(digits))


def _longest_ap_mask(mask: int, length: int) -> int:
    """Longest AP within a position mask; 0 when the mask is empty."""
    if not mask:
        return 0
    best = 1
    for d in range(1, length):
        cur = mask
        ln = 1
        while True:
            nxt = cur & (cur >> d)
            if not nxt:
                break
            cur = nxt
            ln += 1
        if ln > best:
            best = ln
    return best


def longest_mono_ap(c: IntervalColoring, color: int) -> int:
    """Longest arithmetic progression within one colour (0 if unused)."""
    return _longest_ap_mask(c.positions(color), c.length)


def ap_sum(c: IntervalColoring) -> tuple[int, tuple[int, ...]]:
    """Sum over colours of the longest monochromatic AP, plus the profile."""
    per = tuple(longest_mono_ap(c, i) for i in range(c.m))
    return sum(per), per


def _orbit_min_code(m: int, length: int, digits: list[int]) -> int:
    """Least code over interval reversal and colour permutation."""
    best = None
    for perm in itertools.permutations(range(m)):
        for seq in (digits, digits[::-1]):
            code = 0
            for d in reversed(seq):
                code = code * m + perm[d]
            if best is None or code < best:
                best = code
    return best


def check_universal_ap_sum(target: int, length: int, m: int,
                           threads: int = 1, budget: Optional[int] = None,
                           prune: bool = False) -> CheckOutcome:
    """Does every m-colouring of 1..length have AP lengths summing to
    ``target``?  Failures report the minimum-code colouring.

    ``prune`` scans only orbit representatives under reversal and colour
    permutation; the AP sum is invariant under both, and the least failing
    code is always its own representative, so verdict and witness match the
    unpruned scan (the certificate notes the representative count).
    """
    if target < 1:
        raise ValueError(f"target {target} must be positive")
    if length < 1:
        raise ValueError("the interval must be nonempty")
    if not 1 <= m <= MAX_INTERVAL_COLORS:
        raise ValueError(f"colour count {m} outside 1..{MAX_INTERVAL_COLORS}")
    total = m**length
    cap = DEFAULT_INTERVAL_BUDGET if budget is None else budget
    if total > min(cap, ENUMERATION_CAP):
        raise BudgetError(
            f"AP-sum scan at length {length} needs {total} colourings, over the budget"
        )
    chunks = [(m, length, target, prune, lo, hi)
              for lo, hi in chunk_ranges(total, threads)]
    results = run_chunks(_scan_ap_chunk, chunks, threads)
    scanned = sum(r[2] for r in results)
    fails = [(r[0], r[1]) for r in results if r[0] is not None]
    params = {"mode": "wprime", "target": target, "length": length, "m": m}
    if prune:
        params["pruned"] = True
    if not fails:
        cert = SearchCertificate(EXHAUSTIVE, params, target, scanned_count=scanned)
        return CheckOutcome(True, cert)
    code, value = min(fails)
    cert = SearchCertificate(
        WITNESS, params, value,
        witness_coloring=IntervalColoring.from_code(m, length, code).to_text(),
    )
    return CheckOutcome(False, cert)


def _scan_ap_chunk(args):
    m, length, target, prune, start, stop = args
    scanned = 0
    for code in range(start, stop):
        masks = [0] * m
        digits = [0] * length if prune else None
        c = code
        for pos in range(length):
            c, d = divmod(c, m)
            masks[d] |= 1 << pos
            if prune:
                digits[pos] = d
        if prune and _orbit_min_code(m, length, digits) < code:
            continue
        scanned += 1
        value = sum(_longest_ap_mask(mask, length) for mask in masks)
        if value < target:
            return code, value, scanned
    return None, None, scanned


def ap_sum_threshold(m: int, target: int, threads: int = 1,
                     budget: Optional[int] = None, prune: bool = False
                     ) -> SearchResult:
    """Least interval length from which every m-colouring reaches an AP sum
    of ``target``; raises UndecidedError past the budget (no closed form)."""
    if not 1 <= m <= MAX_INTERVAL_COLORS:
        raise ValueError(f"colour count {m} outside 1..{MAX_INTERVAL_COLORS}")
    per_probe = DEFAULT_INTERVAL_BUDGET if budget is None else budget
    params = {"kind": "wprime", "target": target, "m": m}
    last_fail: Optional[SearchCertificate] = None
    length = 1
    while m**length <= min(per_probe, ENUMERATION_CAP):
        outcome = check_universal_ap_sum(target, length, m, threads=threads,
                                         budget=per_probe, prune=prune)
        if outcome.ok:
            return SearchResult("wprime", params, length, True, (length, length),
                                lower=last_fail, upper=outcome.certificate)
        last_fail = outcome.certificate
        length += 1
    raise UndecidedError("wprime", params, length, None, lower=last_fail)


def classical_ap_check(m: int, n: int, length: int, threads: int = 1,
                       budget: Optional[int] = None) -> bool:
    """True iff every m-colouring of 1..length has an n-term progression in
    a single colour (the classical van der Waerden property)."""
    if not 1 <= m <= MAX_INTERVAL_COLORS:
        raise ValueError(f"colour count {m} outside 1..{MAX_INTERVAL_COLORS}")
    if n < 1 or length < 1:
        raise ValueError("n and length must be positive")
    total = m**length
    cap = DEFAULT_INTERVAL_BUDGET if budget is None else budget
    if total > min(cap, ENUMERATION_CAP):
        raise BudgetError(
            f"classical check at length {length} needs {total} colourings, over the budget"
        )
    chunks = [(m, length, n, lo, hi) for lo, hi in chunk_ranges(total, threads)]
    results = run_chunks(_scan_classical_chunk, chunks, threads)
    return all(results)


def _scan_classical_chunk(args) -> bool:
    m, length, n, start, stop = args
    for code in range(start, stop):
        masks = [0] * m
        c = code
        for pos in range(length):
            c, d = divmod(c, m)
            masks[d] |= 1 << pos
        if not any(_longest_ap_mask(mask, length) >= n for mask in masks):
            return False
    return True
