# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import contextlib
import logging
import os
import signal
import threading
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable, Iterator, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")

CancelFn = Callable[[], bool]
ProgressFn = Callable[[int, int, Any], None]

logger = logging.getLogger(__name__)


def default_workers() -> int:
    return max(1, os.cpu_count() or 1)


def map_ordered(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    *,
    cancelled: Optional[CancelFn] = None,
    progress: Optional[ProgressFn] = None,
) -> List[R]:
    """Apply ``fn`` to every item and return results in input order.

    With ``workers > 1`` the calls run in a process pool, so ``fn`` and the
    items must be picklable. When ``cancelled`` turns true the completed
    prefix is returned.
    """

    jobs = list(items)
    total = len(jobs)
    results: List[R] = []
    if workers <= 1 or total <= 1:
        for idx, job in enumerate(jobs, start=1):
            if cancelled and cancelled():
                break
            result = fn(job)
            results.append(result)
            if progress:
                progress(idx, total, result)
        return results

    with ProcessPoolExecutor(max_workers=min(workers, total), initializer=_ignore_interrupts) as executor:
        futures = [executor.submit(fn, job) for job in jobs]
        for idx, future in enumerate(futures, start=1):
            if cancelled and cancelled():
                for pending in futures[idx - 1:]:
                    pending.cancel()
                break
            result = future.result()
            results.append(result)
            if progress:
                progress(idx, total, result)
    return results


def _ignore_interrupts() -> None:
    # the parent owns Ctrl-C and cancels through the token
    signal.signal(signal.SIGINT, signal.SIG_IGN)


def chunked(items: List[T], size: int) -> List[List[T]]:
    return [items[start:start + size] for start in range(0, len(items), size)]


class CancelToken:
    def __init__(self) -> None:
        self._event = threading.Event()

    def cancel(self) -> None:
        self._event.set()

    def cancelled(self) -> bool:
        return self._event.is_set()


@contextlib.contextmanager
def cancel_on_interrupt() -> Iterator[CancelToken]:
    """Turn the first Ctrl-C into a cancel request; a second one aborts."""
    token = CancelToken()

    def handle(signum: int, frame: Any) -> None:
        if token.cancelled():
            raise KeyboardInterrupt
        logger.warning("interrupt received, stopping after the running cells (Ctrl-C again to abort)")
        token.cancel()

    previous = signal.signal(signal.SIGINT, handle)
    try:
        yield token
    finally:
        signal.signal(signal.SIGINT, previous)
