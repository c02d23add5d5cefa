"""
Worker pool for per-path Monte Carlo tasks.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

from cojump.exceptions import InvalidParameterError

# Configure logger
logger = logging.getLogger("cojump.experiments.pool")

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int]) -> int:
    """
    Number of worker processes to use.

    Args:
        threads: Requested count; None or 0 means one per CPU

    Raises:
        InvalidParameterError: If threads is negative
    """
    if threads is None or threads == 0:
        return os.cpu_count() or 1
    if threads < 0:
        raise InvalidParameterError("threads", threads, component="experiments")
    return int(threads)


def parallel_map(function: Callable[[T], R], tasks: Sequence[T], threads: Optional[int] = 1,
                 progress: bool = False, desc: str = "Simulating paths") -> List[R]:
    """
    Apply a picklable function to every task, in task order.

    Results come back in the order of ``tasks`` whatever the number of
    workers, so aggregates built from them do not depend on scheduling.

    Args:
        function: Module level function applied to each task
        tasks: The tasks
        threads: Worker processes; 1 runs in the calling process
        progress: Show a tqdm progress bar
        desc: Progress bar label
    """
    workers = min(resolve_threads(threads), max(len(tasks), 1))
    logger.info(f"Running {len(tasks)} tasks on {workers} worker(s)")
    if workers == 1:
        return [function(task) for task in tqdm(tasks, desc=desc, disable=not progress)]

    chunksize = max(1, len(tasks) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        results = executor.map(function, tasks, chunksize=chunksize)
        return list(tqdm(results, total=len(tasks), desc=desc, disable=not progress))
