"""Deterministic sharding of instance-code ranges over worker processes.

Chunks are contiguous code ranges handed to top-level worker functions, and
merges are commutative folds (sum of scanned counts, minimum failing code),
so the outcome is identical at any thread count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into at most ``parts`` contiguous nonempty ranges."""
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    out = []
    at = 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        if size:
            out.append((at, at + size))
            at += size
    return out


def run_chunks(worker: Callable, arg_tuples: Sequence[tuple], threads: int) -> list:
    """Run ``worker`` over every arg tuple, in order, serially or in a pool."""
    if threads <= 1 or len(arg_tuples) <= 1:
        return [worker(args) for args in arg_tuples]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, arg_tuples))
