# Execute work units one after another
"""Sequential execution strategy"""

from typing import Callable, List, Sequence, TypeVar

from observability.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SequentialStrategy:
    """Run work units inline in the calling process"""

    def execute(
        self,
        fn: Callable[[T], R],
        units: Sequence[T],
    ) -> List[R]:
        logger.debug("sequential_start", units=len(units))
        return [fn(unit) for unit in units]
