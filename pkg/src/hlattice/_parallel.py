"""Deterministic sharded execution for the verification scans."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def default_jobs() -> int:
    return os.cpu_count() or 1


def split_range(lo: int, hi: int, parts: int, *, step: int = 2) -> list[tuple[int, int]]:
    """Split the stepped range ``lo, lo+step, ..., hi`` into contiguous shards.

    Both ends of every shard are inclusive and keep the parity of ``lo``.
    """
    count = (hi - lo) // step + 1
    parts = max(1, min(parts, count))
    base, extra = divmod(count, parts)
    shards = []
    start = lo
    for i in range(parts):
        n = base + (1 if i < extra else 0)
        end = start + (n - 1) * step
        shards.append((start, end))
        start = end + step
    return shards


def run_sharded(func, shards, jobs: int | None = None) -> list:
    """Apply ``func(*shard)`` to every shard; results come back in shard order."""
    jobs = default_jobs() if jobs is None else jobs
    if jobs < 1:
        raise ValueError("jobs must be positive")
    if jobs == 1 or len(shards) == 1:
        return [func(*shard) for shard in shards]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(func, *shard) for shard in shards]
        return [f.result() for f in futures]
