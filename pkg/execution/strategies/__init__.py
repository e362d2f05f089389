# Execution strategies
"""Execution strategies for deterministic work-unit partitions"""

import asyncio
from typing import Callable, List, Sequence, TypeVar

from execution.models.status import ExecutionMode
from .sequential import SequentialStrategy
from .parallel import ParallelStrategy

T = TypeVar("T")
R = TypeVar("R")


def select_mode(workers: int, units: int) -> ExecutionMode:
    if workers <= 1 or units <= 1:
        return ExecutionMode.SEQUENTIAL
    return ExecutionMode.PARALLEL


def run_work_units(
    fn: Callable[[T], R],
    units: Sequence[T],
    workers: int = 1,
) -> List[R]:
    """Run `fn` over `units` and return results in unit order."""
    if select_mode(workers, len(units)) is ExecutionMode.SEQUENTIAL:
        return SequentialStrategy().execute(fn, units)
    strategy = ParallelStrategy(max_concurrent=min(workers, len(units)))
    return asyncio.run(strategy.execute(fn, units))


__all__ = [
    "SequentialStrategy",
    "ParallelStrategy",
    "run_work_units",
    "select_mode",
]
