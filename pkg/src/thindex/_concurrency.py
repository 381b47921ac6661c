"""Optional thread fan-out for independent per-item computations.

The ``THX_THREADS`` environment variable caps the number of worker
threads (default 1 = sequential).  Results are folded in input order, so
the output never depends on scheduling.  Under CPython the interpreter
lock serializes pure-Python work; the knob bounds concurrency, it is not
a parallel speedup for CPU-bound sweeps.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_ENV_VAR = "THX_THREADS"


def thread_cap() -> int:
    raw = os.environ.get(_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ordered_map(fn: Callable[[T], R], items: Sequence[T] | Iterable[T]) -> list[R]:
    """Apply ``fn`` to every item, preserving input order in the result."""
    items = list(items)
    workers = min(thread_cap(), len(items)) if items else 1
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
