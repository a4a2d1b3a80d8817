from __future__ import annotations

import asyncio
import logging
import os
from collections.abc import Callable, Sequence

log = logging.getLogger(__name__)


def worker_count(threads: int | None) -> int:
    return threads or os.cpu_count() or 1


async def gather_in_threads[T](tasks: Sequence[Callable[[], T]], threads: int | None = None) -> list[T]:
    """Run blocking ``tasks`` on worker threads, at most ``threads`` at a time.

    Results come back in submission order.
    """
    limit = asyncio.Semaphore(worker_count(threads))

    async def run(task: Callable[[], T]) -> T:
        async with limit:
            return await asyncio.to_thread(task)

    return list(await asyncio.gather(*(run(task) for task in tasks)))


def _loop_running() -> bool:
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return False
    return True


def run_in_threads[T](tasks: Sequence[Callable[[], T]], threads: int | None = None) -> list[T]:
    """Blocking front end of :func:`gather_in_threads`.

    One thread runs inline, and so does a call made from inside a running
    event loop (a notebook, an async caller), where ``asyncio.run`` is not
    allowed.
    """
    if worker_count(threads) == 1 or len(tasks) <= 1 or _loop_running():
        return [task() for task in tasks]
    log.debug("Dispatching tasks", extra={"tasks": len(tasks), "threads": worker_count(threads)})
    return asyncio.run(gather_in_threads(tasks, threads))


def partition(size: int, parts: int) -> list[range]:
    """Split ``range(size)`` into at most ``parts`` contiguous non-empty chunks."""
    parts = max(1, min(parts, size))
    bounds = [size * p // parts for p in range(parts + 1)]
    return [range(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
