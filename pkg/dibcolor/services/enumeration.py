# dibcolor/services/enumeration.py
from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterator, Optional, Sequence

from dibcolor.config import settings

from .codec import decode_d6, encode_d6
from .digraph import Digraph, from_rows, relabel
from .errors import LimitExceeded, PreconditionFailed

logger = logging.getLogger(__name__)


# ---------- канонизация ----------

def _refine(d: Digraph) -> list[int]:
    """Уточнение раскраски вершин: старт с (deg⁺, deg⁻), затем мультимножества цветов соседей."""
    sigs: list[tuple] = [(d.out_degrees[v], d.in_degrees[v]) for v in d.vertices]
    colors: list[int] = []
    if not sigs:
        return colors
    while True:
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        # цвет вершины входит в подпись, поэтому классы только дробятся
        if colors and len(rank) == len(set(colors)):
            return colors
        colors = [rank[s] for s in sigs]
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[w] for w in d.out_neighbors(v))),
                tuple(sorted(colors[w] for w in d.in_neighbors(v))),
            )
            for v in d.vertices
        ]


def canonical_order(d: Digraph) -> list[int]:
    """
    Порядок вершин с лексикографически минимальным кодом матрицы смежности
    среди порядков, согласованных с ячейками уточнения. Код строится по позициям:
    для новой вершины — биты дуг к уже поставленным и от них, поэтому префиксы сравнимы.
    """
    n = d.n
    colors = _refine(d)
    cell_of_pos = sorted(colors)
    order: list[int] = []
    code: list[tuple[int, ...]] = []
    used = 0
    best: Optional[list[tuple[int, ...]]] = None
    best_order: list[int] = []

    def segment(v: int) -> tuple[int, ...]:
        return tuple(d.out_rows[u] >> v & 1 for u in order) + tuple(d.out_rows[v] >> u & 1 for u in order)

    def search(p: int) -> None:
        nonlocal used, best, best_order
        if p == n:
            if best is None or code < best:
                best = list(code)
                best_order = list(order)
            return
        for v in range(n):
            if used >> v & 1 or colors[v] != cell_of_pos[p]:
                continue
            seg = segment(v)
            if best is not None and code + [seg] > best[:p + 1]:
                continue
            order.append(v)
            code.append(seg)
            used |= 1 << v
            search(p + 1)
            used &= ~(1 << v)
            code.pop()
            order.pop()

    search(0)
    return best_order


def canonical_digraph(d: Digraph) -> Digraph:
    if d.n > settings.CANON_MAX_N:
        raise LimitExceeded(
            f"canonical form is limited to n <= {settings.CANON_MAX_N}",
            details={"n": d.n, "limit": settings.CANON_MAX_N},
        )
    order = canonical_order(d)
    perm = [0] * d.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return relabel(d, perm)


def canonical_form(d: Digraph) -> bytes:
    """digraph6 канонического представителя: равны тогда и только тогда, когда орграфы изоморфны."""
    return encode_d6(canonical_digraph(d)).encode("ascii")


def is_canonical(d: Digraph) -> bool:
    return canonical_form(d) == encode_d6(d).encode("ascii")


# ---------- помеченный перебор ----------

def _row_choices(n: int, u: int, k: int, col_left: Sequence[int]) -> Iterator[int]:
    pool = [v for v in range(n) if v != u and col_left[v] > 0]
    for combo in combinations(pool, k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask


def enumerate_labeled(
    n: int,
    outdeg: Sequence[int],
    indeg: Sequence[int],
    *,
    first_row: Optional[int] = None,
) -> Iterator[Digraph]:
    """
    Все орграфы с заданными профилями полустепеней: перебор 0-1 матриц
    с нулевой диагональю по строкам с контролем остатков по столбцам.
    first_row фиксирует первую строку (для разбиения работы на части).
    """
    if len(outdeg) != n or len(indeg) != n:
        raise PreconditionFailed("degree profiles must have length n", details={"n": n})
    if sum(outdeg) != sum(indeg) or any(not 0 <= x < max(n, 1) for x in (*outdeg, *indeg)):
        return
    col_left = list(indeg)
    rows = [0] * n

    def feasible(u: int) -> bool:
        # столбцу v нужны col_left[v] единиц из строк u..n-1, кроме самой v
        for v in range(n):
            avail = n - u - (1 if v >= u else 0)
            if col_left[v] > avail:
                return False
        return True

    def rec(u: int) -> Iterator[Digraph]:
        if u == n:
            yield from_rows(rows)
            return
        choices = [first_row] if u == 0 and first_row is not None else _row_choices(n, u, outdeg[u], col_left)
        for mask in choices:
            if mask.bit_count() != outdeg[u] or mask >> u & 1:
                continue
            if any(col_left[v] <= 0 for v in range(n) if mask >> v & 1):
                continue
            for v in range(n):
                if mask >> v & 1:
                    col_left[v] -= 1
            rows[u] = mask
            if feasible(u + 1):
                yield from rec(u + 1)
            for v in range(n):
                if mask >> v & 1:
                    col_left[v] += 1
        rows[u] = 0

    if n == 0:
        yield from_rows([])
        return
    yield from rec(0)


def regular_shards(n: int, r: int) -> list[int]:
    """Варианты первой строки r-регулярной матрицы: независимые части перебора."""
    if n == 0 or not 0 <= r < n:
        return []
    return list(_row_choices(n, 0, r, [r] * n))


def enumerate_regular_shard(n: int, r: int, first_row: int, up_to_iso: bool) -> list[str]:
    """digraph6-строки части перебора; при up_to_iso только канонические представители."""
    out = []
    for d in enumerate_labeled(n, [r] * n, [r] * n, first_row=first_row):
        text = encode_d6(d)
        if not up_to_iso or canonical_form(d).decode("ascii") == text:
            out.append(text)
    return out


def enumerate_regular(n: int, r: int, up_to_iso: bool = True) -> list[Digraph]:
    if up_to_iso and n > settings.ENUM_MAX_N:
        raise LimitExceeded(
            f"up-to-isomorphism enumeration is limited to n <= {settings.ENUM_MAX_N}",
            details={"n": n, "limit": settings.ENUM_MAX_N},
        )
    if not 0 <= r < n:
        return []
    lines: list[str] = []
    for shard in regular_shards(n, r):
        lines.extend(enumerate_regular_shard(n, r, shard, up_to_iso))
    if up_to_iso:
        lines.sort()
    logger.debug("[ENUM] n=%d r=%d up_to_iso=%s count=%d", n, r, up_to_iso, len(lines))
    return [decode_d6(x) for x in lines]


def iter_all_digraphs(n: int) -> Iterator[Digraph]:
    """Все 2^(n²-n) помеченных орграфов порядка n."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
        yield from_rows(rows)


def iter_tournaments(n: int) -> Iterator[Digraph]:
    """Все 2^(n(n-1)/2) помеченных турниров порядка n."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[v] |= 1 << u
            else:
                rows[u] |= 1 << v
        yield from_rows(rows)
