"""Deterministic fan-out of independent work items."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger("IsoHorn")

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """Apply func to every item, returning results in input order.

    Args:
        func: Pure function of one work item
        items: Work items
        workers: Thread count; 1 runs inline

    Returns:
        List of results aligned with items
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]

    logger.debug(f"Dispatching {len(items)} items to {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
