"""Bounded concurrent evaluation of grid points.

Each point runs in a worker thread via `asyncio.to_thread`; a semaphore
limits how many run at once. `asyncio.gather` returns results in input order,
so whatever assembles the output sees the same sequence for any worker count.
"""

import asyncio
from collections.abc import Callable, Sequence
from typing import TypeVar

P = TypeVar("P")
R = TypeVar("R")


async def map_points(
    fn: Callable[[P], R],
    points: Sequence[P],
    threads: int = 1,
    on_done: Callable[[int], None] | None = None,
) -> list[R]:
    """Evaluate fn on every point with at most `threads` concurrent workers.

    Args:
        fn: Blocking function of one grid point.
        points: The grid points.
        threads: Maximum concurrent workers (>= 1).
        on_done: Called with the number of completed points after each one.

    Returns:
        Results in the order of `points`.

    Raises:
        ValueError: If threads < 1.
        Exception: The first exception raised by fn; pending points are
            cancelled.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")

    semaphore = asyncio.Semaphore(threads)
    completed = 0

    async def run(point: P) -> R:
        nonlocal completed
        async with semaphore:
            result = await asyncio.to_thread(fn, point)
        completed += 1
        if on_done is not None:
            on_done(completed)
        return result

    tasks = [asyncio.create_task(run(p)) for p in points]
    try:
        return await asyncio.gather(*tasks)
    except BaseException:
        for task in tasks:
            task.cancel()
        await asyncio.gather(*tasks, return_exceptions=True)
        raise


def run_points(
    fn: Callable[[P], R], points: Sequence[P], threads: int = 1
) -> list[R]:
    """Synchronous wrapper around `map_points` for CLI and library callers."""
    return asyncio.run(map_points(fn, points, threads))
