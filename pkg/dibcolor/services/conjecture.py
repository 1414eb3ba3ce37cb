# dibcolor/services/conjecture.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from dibcolor.config import settings
from dibcolor.workers import run_chunked

from .codec import decode_d6
from .digraph import Digraph
from .enumeration import enumerate_regular_shard, regular_shards
from .errors import LimitExceeded
from .solvers import dib_exact

logger = logging.getLogger(__name__)


@dataclass
class RegularCatalog:
    """r-регулярные орграфы порядка n с точностью до изоморфизма, разбитые по значению dib."""

    n: int
    r: int
    by_dib: dict[int, list[str]] = field(default_factory=dict)

    @property
    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.by_dib.items())}

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.by_dib.values())

    def members(self, dib: int) -> list[Digraph]:
        return [decode_d6(x) for x in self.by_dib.get(dib, [])]


def scan_shard(n: int, r: int, first_row: int) -> list[tuple[str, int]]:
    return [
        (text, dib_exact(decode_d6(text)).value)
        for text in enumerate_regular_shard(n, r, first_row, up_to_iso=True)
    ]


def regular_catalog(n: int, r: int, *, threads: Optional[int] = None) -> RegularCatalog:
    if n > settings.ENUM_MAX_N:
        raise LimitExceeded(
            f"regular catalog is limited to n <= {settings.ENUM_MAX_N}",
            details={"n": n, "limit": settings.ENUM_MAX_N},
        )
    shards = [(n, r, row) for row in regular_shards(n, r)]
    rows = [pair for chunk in run_chunked(scan_shard, shards, threads=threads, desc=f"n={n} r={r}") for pair in chunk]
    rows.sort()
    catalog = RegularCatalog(n=n, r=r)
    for text, dib in rows:
        catalog.by_dib.setdefault(dib, []).append(text)
    catalog.by_dib = dict(sorted(catalog.by_dib.items()))
    logger.info("[CATALOG] n=%d r=%d counts=%s", n, r, catalog.counts)
    return catalog


def conjecture_scan(
    n_max: int,
    *,
    n_min: int = 3,
    include_one_regular: bool = True,
    threads: Optional[int] = None,
) -> list[RegularCatalog]:
    """
    Каталоги 2-регулярных орграфов для n_min..n_max, разбитые на dib = 2 и dib = 3,
    и (по умолчанию) 1-регулярные каталоги, где ожидается только dib = 2.
    """
    if n_max > settings.ENUM_MAX_N:
        raise LimitExceeded(
            f"conjecture scan is limited to n <= {settings.ENUM_MAX_N}",
            details={"n_max": n_max, "limit": settings.ENUM_MAX_N},
        )
    out: list[RegularCatalog] = []
    for n in range(n_min, n_max + 1):
        if include_one_regular:
            out.append(regular_catalog(n, 1, threads=threads))
        out.append(regular_catalog(n, 2, threads=threads))
    unexpected = [(c.n, c.r, sorted(c.by_dib)) for c in out if set(c.by_dib) - ({2} if c.r == 1 else {2, 3})]
    if unexpected:
        logger.warning("[CONJECTURE] unexpected dib values: %s", unexpected)
    return out
