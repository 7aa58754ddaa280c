"""Order-preserving fan-out over worker processes.

Results always come back in item order and are cut after the first one that
satisfies ``stop``, so the merged outcome does not depend on the number of
workers or on scheduling.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

Worker = Callable[[dict[str, Any], T], R]

# Read-only payload installed once per worker process.
_shared: dict[str, Any] = {}


def _install(shared: dict[str, Any]) -> None:
    _shared.clear()
    _shared.update(shared)


def _call(worker: Worker[T, R], item: T) -> R:
    return worker(_shared, item)


def fan_out(
    worker: Worker[T, R],
    shared: dict[str, Any],
    items: Sequence[T],
    *,
    threads: int = 1,
    stop: Callable[[R], bool] | None = None,
) -> list[R]:
    """Run ``worker(shared, item)`` for each item and return the results in order.

    ``worker`` must be a module-level function so it can be sent to worker
    processes. With ``threads <= 1`` everything runs in this process.
    """
    results: list[R] = []
    if threads <= 1 or len(items) <= 1:
        for item in items:
            result = worker(shared, item)
            results.append(result)
            if stop is not None and stop(result):
                break
        return results

    workers = min(threads, len(items))
    logger.debug("Fanning out %d items over %d processes", len(items), workers)
    pool = ProcessPoolExecutor(
        max_workers=workers,
        initializer=_install,
        initargs=(shared,),
    )
    try:
        for result in pool.map(partial(_call, worker), items):
            results.append(result)
            if stop is not None and stop(result):
                break
    finally:
        pool.shutdown(wait=True, cancel_futures=True)
    return results
