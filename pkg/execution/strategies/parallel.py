# Execute work units in parallel
"""Parallel execution strategy"""

from typing import Callable, List, Optional, Sequence, TypeVar
from concurrent.futures import Executor, ProcessPoolExecutor
import asyncio

from observability.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ParallelStrategy:
    """Run work units on a process pool, results in submission order"""

    def __init__(
        self,
        max_concurrent: int = 4,
        executor: Optional[Executor] = None,
    ):
        if max_concurrent < 1:
            raise ValueError(f"max_concurrent must be positive, got {max_concurrent}")
        self.max_concurrent = max_concurrent
        self.executor = executor
        self.semaphore: Optional[asyncio.Semaphore] = None

    async def execute(
        self,
        fn: Callable[[T], R],
        units: Sequence[T],
    ) -> List[R]:
        """
        Execute `fn` over every unit concurrently

        Args:
            fn: Module-level (picklable) function
            units: Work units, each picklable

        Returns:
            List of results in the original unit order
        """
        logger.info("parallel_start", units=len(units), workers=self.max_concurrent)

        self.semaphore = asyncio.Semaphore(self.max_concurrent)
        owned = self.executor is None
        executor = self.executor or ProcessPoolExecutor(max_workers=self.max_concurrent)

        try:
            tasks = [
                self._execute_with_semaphore(executor, fn, unit)
                for unit in units
            ]
            # gather keeps submission order, so merges do not depend on scheduling
            results = await asyncio.gather(*tasks)
        finally:
            if owned:
                executor.shutdown(wait=True)

        logger.info("parallel_complete", units=len(results))
        return list(results)

    async def _execute_with_semaphore(
        self,
        executor: Executor,
        fn: Callable[[T], R],
        unit: T,
    ) -> R:
        """Execute a single unit with semaphore control"""
        assert self.semaphore is not None
        async with self.semaphore:
            loop = asyncio.get_running_loop()
            return await loop.run_in_executor(executor, fn, unit)
