"""Order-preserving fan-out over worker processes."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def default_jobs() -> int:
    env = os.environ.get("HYPERFORGE_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def ordered_map(fn, items, jobs: int = 1) -> list:
    """``[fn(x) for x in items]``, optionally spread over ``jobs`` processes.

    Results always come back in input order, so output never depends on the
    degree of parallelism.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
