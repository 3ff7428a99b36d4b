"""Worker-count resolution shared by the parallel subset sums."""

from __future__ import annotations

import os
from typing import Optional

WORKERS_ENV = "INTERLACEPOLY_WORKERS"

# Below this size the per-process overhead dwarfs the sum itself.
PARALLEL_THRESHOLD = 16


def available_parallelism() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return max(1, os.cpu_count() or 1)


def resolve_workers(workers: Optional[int]) -> int:
    """Explicit argument, else the INTERLACEPOLY_WORKERS environment
    variable, else the machine's available parallelism."""
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "").strip()
        if not raw:
            return available_parallelism()
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return workers
