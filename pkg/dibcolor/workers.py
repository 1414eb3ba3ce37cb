# dibcolor/workers.py
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from tqdm import tqdm

from dibcolor.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def progress(it: Iterable[T], *, total: Optional[int] = None, desc: Optional[str] = None) -> Iterable[T]:
    if not settings.SHOW_PROGRESS:
        return it
    return tqdm(it, total=total, desc=desc, ncols=80, leave=False)


def run_chunked(
    func: Callable[..., R],
    arguments: Sequence[tuple],
    *,
    threads: Optional[int] = None,
    desc: Optional[str] = None,
) -> list[R]:
    """
    Применить func ко всем наборам аргументов. Результаты возвращаются
    в порядке аргументов независимо от числа процессов.
    """
    workers = threads if threads is not None else settings.THREADS
    args = list(arguments)
    logger.info("[JOB START] desc=%s chunks=%d workers=%d", desc, len(args), workers)
    if workers <= 1 or len(args) <= 1:
        results = [func(*a) for a in progress(args, total=len(args), desc=desc)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            mapped = pool.map(func, *zip(*args)) if args else iter(())
            results = list(progress(mapped, total=len(args), desc=desc))
    logger.info("[JOB DONE] desc=%s chunks=%d", desc, len(results))
    return results
