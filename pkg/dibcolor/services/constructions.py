# dibcolor/services/constructions.py
from __future__ import annotations

import logging
from itertools import combinations, permutations
from typing import Iterable, Optional

from .coloring import Coloring, audit, greedy_acyclic
from .digraph import Digraph, closed_ball, closes_cycle, is_regular, weak_distance
from .errors import GenerationFailed, PreconditionFailed
from .invariants import max_acyclic_set

logger = logging.getLogger(__name__)


def color_transitive(n: int) -> Coloring:
    """v и n-1-v в одном классе: ⌈n/2⌉ цветов на транзитивном турнире."""
    if n < 1:
        raise PreconditionFailed(f"n must be >= 1, got {n}", details={"n": n})
    return Coloring(tuple(min(v, n - 1 - v) for v in range(n)))


def color_circulant_tournament(m: int) -> Coloring:
    """Раскраска C₂ₘ₊₁({1..m}) в m+1 цвет: 0 отдельно, i и i+m вместе."""
    if m < 1:
        raise PreconditionFailed(f"m must be >= 1, got {m}", details={"m": m})
    colors = [0] * (2 * m + 1)
    for i in range(1, m + 1):
        colors[i] = colors[i + m] = i
    return Coloring(tuple(colors))


def color_circulant_path(n: int, k: int) -> Coloring:
    if n < 4:
        raise PreconditionFailed(f"n must be >= 4, got {n}", details={"n": n, "k": k})
    if not 1 <= k <= (n - 2) // 2:
        raise PreconditionFailed(
            f"k must lie in 1..{(n - 2) // 2} for n={n}, got {k}",
            details={"n": n, "k": k},
        )
    return Coloring(tuple(v % (k + 1) for v in range(n)))


def theorem5_coloring(d: Digraph) -> Coloring:
    """Наибольшее ацикличное множество получает цвет 0, остальное красится жадно, не больше n-𝒜+1 цветов."""
    base = max_acyclic_set(d)
    pre = [0 if base >> v & 1 else None for v in d.vertices]
    return greedy_acyclic(d, precolored=pre)


def _aligned_bases(b_plus: list[int], b_minus: list[int]) -> tuple[list[int], list[int]]:
    # общие вершины идут первыми и получают один и тот же индекс
    shared = sorted(set(b_plus) & set(b_minus))
    u = shared + sorted(set(b_plus) - set(shared))
    v = shared + sorted(set(b_minus) - set(shared))
    return u, v


def _check_theorem9(d: Digraph, b_plus: list[int], b_minus: list[int]) -> int:
    delta = d.delta
    size = delta + 1
    for name, basis in (("Bplus", b_plus), ("Bminus", b_minus)):
        if len(set(basis)) != len(basis):
            raise PreconditionFailed(f"{name} has repeated vertices", details={name: basis})
        if len(basis) != size:
            raise PreconditionFailed(
                f"|{name}| must equal delta+1={size}, got {len(basis)}",
                details={"set": name, "size": len(basis), "expected": size},
            )
        for x in basis:
            if not 0 <= x < d.n:
                raise PreconditionFailed(f"vertex {x} is out of range", details={"vertex": x, "n": d.n})
    for u in b_plus:
        if d.out_degree(u) != delta:
            raise PreconditionFailed(
                f"out-degree of {u} is {d.out_degree(u)}, expected {delta}",
                details={"vertex": u, "out_degree": d.out_degree(u), "delta": delta},
            )
    for v in b_minus:
        if d.in_degree(v) != delta:
            raise PreconditionFailed(
                f"in-degree of {v} is {d.in_degree(v)}, expected {delta}",
                details={"vertex": v, "in_degree": d.in_degree(v), "delta": delta},
            )
    pairs = [(x, y, 4) for basis in (b_plus, b_minus) for x, y in combinations(sorted(basis), 2)]
    # для пары из разных базисов достаточно, чтобы out-соседи u и in-соседи v не пересекались
    pairs += [(x, y, 3) for x in b_plus for y in b_minus if x != y]
    for x, y, need in pairs:
        dist = weak_distance(d, x, y)
        if dist < need:
            raise PreconditionFailed(
                f"weak distance between {x} and {y} is {dist} < {need}",
                details={"pair": [x, y], "distance": dist, "required": need},
            )
    return delta


def _fill_in_neighbors(
    d: Digraph, colors: list[Optional[int]], classes: list[int], v: int, own: int
) -> None:
    palette = [c for c in range(len(classes)) if c != own]
    ins = d.in_neighbors(v)
    taken = {colors[w] for w in ins if colors[w] is not None}
    free = [w for w in ins if colors[w] is None]
    needed = [c for c in palette if c not in taken]
    # соседи вершины-дублёра могут быть связаны дигоном, перебираем перестановки
    for perm in permutations(needed, len(free)):
        trial = list(classes)
        ok = True
        for w, c in zip(free, perm):
            if closes_cycle(d, trial[c], w):
                ok = False
                break
            trial[c] |= 1 << w
        if ok:
            for w, c in zip(free, perm):
                colors[w] = c
            classes[:] = trial
            return
    raise GenerationFailed(
        f"in-neighbors of {v} admit no acyclic assignment",
        details={"vertex": v, "in_neighbors": ins},
    )


def theorem9_coloring(d: Digraph, b_plus: Iterable[int], b_minus: Iterable[int]) -> Coloring:
    """
    Построение b-раскраски в Δ+1 цвет: вершины внутри B⁺ и внутри B⁻ попарно на слабом расстоянии >= 4,
    вершины из разных базисов (кроме общих) на расстоянии >= 3.

    Цвет i получают uᵢ и vᵢ; out-соседи uᵢ и in-соседи vᵢ — остальные Δ цветов попарно различно;
    прочие вершины — жадно в пределах палитры 0..Δ.
    """
    plus, minus = list(b_plus), list(b_minus)
    delta = _check_theorem9(d, plus, minus)
    u, v = _aligned_bases(plus, minus)
    k = delta + 1
    colors: list[Optional[int]] = [None] * d.n
    classes = [0] * k
    for i in range(k):
        for x in (u[i], v[i]):
            colors[x] = i
            classes[i] |= 1 << x
    for i in range(k):
        palette = (c for c in range(k) if c != i)
        for w, c in zip(d.out_neighbors(u[i]), palette):
            colors[w] = c
            classes[c] |= 1 << w
    for i in range(k):
        _fill_in_neighbors(d, colors, classes, v[i], i)
    logger.debug("[THM9] n=%d delta=%d seeded=%d", d.n, delta, sum(x is not None for x in colors))
    result = greedy_acyclic(d, precolored=colors, max_colors=k)
    report = audit(d, result)
    if not (report.acyclic and report.is_b_coloring):
        raise GenerationFailed(
            "seeded bases did not yield an acyclic b-coloring",
            details={"cyclic_classes": report.cyclic_classes, "b_plus": plus, "b_minus": minus},
        )
    return result


def spread_vertices(d: Digraph, r: int) -> Optional[tuple[list[int], list[int]]]:
    """
    Жадный выбор r+1 вершин с попарным слабым расстоянием >= 4: берём наименьшую живую вершину
    и удаляем её замкнутый шар радиуса 3. None, если вершины кончились раньше.
    """
    if not is_regular(d, r):
        raise PreconditionFailed(f"digraph is not {r}-regular", details={"r": r})
    alive = d.all_mask
    chosen: list[int] = []
    for x in d.vertices:
        if len(chosen) == r + 1:
            break
        if alive >> x & 1:
            chosen.append(x)
            alive &= ~closed_ball(d, x, 3)
    if len(chosen) < r + 1:
        logger.debug("[SPREAD] n=%d r=%d found=%d", d.n, r, len(chosen))
        return None
    return chosen, list(chosen)
