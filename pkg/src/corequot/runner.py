"""Ordered worker pool for batch verification."""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger("corequot")

T = TypeVar("T")
R = TypeVar("R")

# Log progress every this many subjects
PROGRESS_EVERY = 100


def run_ordered(check: Callable[[T], R], subjects: Sequence[T], threads: int = 1, label: str = "check") -> List[R]:
    """Apply `check` to every subject; results come back in input order whatever the completion order."""
    start = time.perf_counter()
    logger.info(f"{label}: {len(subjects)} subjects on {threads} worker(s)")

    results: List[R] = []
    if threads <= 1 or len(subjects) <= 1:
        for index, subject in enumerate(subjects, start=1):
            results.append(check(subject))
            if index % PROGRESS_EVERY == 0:
                logger.debug(f"{label}: {index}/{len(subjects)} done")
    else:
        with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="corequot") as pool:
            # map preserves submission order
            for index, result in enumerate(pool.map(check, subjects), start=1):
                results.append(result)
                if index % PROGRESS_EVERY == 0:
                    logger.debug(f"{label}: {index}/{len(subjects)} done")

    elapsed = (time.perf_counter() - start) * 1000
    logger.info(f"{label}: finished {len(results)} subjects in {elapsed:.1f} ms")
    return results
