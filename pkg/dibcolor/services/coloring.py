# dibcolor/services/coloring.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, Optional, Sequence

from .digraph import Digraph, closes_cycle, iter_bits, mask_is_acyclic
from .errors import InvalidColoring, PreconditionFailed

logger = logging.getLogger(__name__)

Parameter = Literal["dc", "dac", "dib"]


@dataclass(frozen=True)
class Coloring:
    """
    Тотальная сюръективная раскраска: colors[v] ∈ 0..k-1, каждый класс непуст.
    """

    colors: tuple[int, ...]
    k: int = field(init=False)

    def __post_init__(self) -> None:
        colors = tuple(int(x) for x in self.colors)
        object.__setattr__(self, "colors", colors)
        k = max(colors) + 1 if colors else 0
        if any(x < 0 for x in colors) or len(set(colors)) != k:
            raise InvalidColoring(
                "color indices must be dense 0..k-1",
                details={"colors": list(colors)},
            )
        object.__setattr__(self, "k", k)

    @property
    def n(self) -> int:
        return len(self.colors)

    @cached_property
    def classes(self) -> tuple[int, ...]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return tuple(masks)

    def class_members(self, color: int) -> list[int]:
        return list(iter_bits(self.classes[color]))

    def as_list(self) -> list[int]:
        return list(self.colors)

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> "Coloring":
        colors: list[Optional[int]] = [None] * n
        for c, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n or colors[v] is not None:
                    raise InvalidColoring("classes must partition the vertex set", details={"vertex": v})
                colors[v] = c
        if any(x is None for x in colors):
            missing = [v for v, x in enumerate(colors) if x is None]
            raise InvalidColoring("classes must cover every vertex", details={"uncovered": missing})
        return cls(tuple(colors))  # type: ignore[arg-type]

    @classmethod
    def compact(cls, raw: Sequence[int]) -> "Coloring":
        """Перенумеровать произвольные метки в 0..k-1 с сохранением их порядка."""
        order = {c: i for i, c in enumerate(sorted(set(raw)))}
        return cls(tuple(order[c] for c in raw))


@dataclass
class ColoringAudit:
    k: int
    acyclic: bool
    cyclic_classes: list[int]
    complete: bool
    missing_pairs: list[tuple[int, int]]
    b_plus: list[list[int]]
    b_minus: list[list[int]]
    is_b_coloring: bool
    positive_basis: Optional[list[int]]
    negative_basis: Optional[list[int]]

    def satisfies(self, parameter: Parameter) -> bool:
        """Вердикт, который должен выполняться для свидетеля соответствующего параметра."""
        if parameter == "dc":
            return self.acyclic
        if parameter == "dac":
            return self.acyclic and self.complete
        return self.acyclic and self.is_b_coloring


def color_reach(d: Digraph, c: Coloring) -> tuple[list[int], list[int]]:
    """Для каждой вершины: маска цветов её out-соседей и in-соседей."""
    out_cols = [0] * d.n
    in_cols = [0] * d.n
    colors = c.colors
    for u, v in d.darts:
        out_cols[u] |= 1 << colors[v]
        in_cols[v] |= 1 << colors[u]
    return out_cols, in_cols


def audit(d: Digraph, c: Coloring) -> ColoringAudit:
    if c.n != d.n:
        raise InvalidColoring(
            f"coloring covers {c.n} vertices, digraph has {d.n}",
            details={"coloring_length": c.n, "n": d.n},
        )
    k = c.k
    classes = c.classes
    cyclic = [i for i, mask in enumerate(classes) if not mask_is_acyclic(d, mask)]

    out_cols, in_cols = color_reach(d, c)
    reach = [0] * k
    for v, col in enumerate(c.colors):
        reach[col] |= out_cols[v]
    missing = [(i, j) for i in range(k) for j in range(k) if i != j and not reach[i] >> j & 1]

    full = (1 << k) - 1
    b_plus: list[list[int]] = [[] for _ in range(k)]
    b_minus: list[list[int]] = [[] for _ in range(k)]
    for v, col in enumerate(c.colors):
        own = 1 << col
        if out_cols[v] | own == full:
            b_plus[col].append(v)
        if in_cols[v] | own == full:
            b_minus[col].append(v)

    has_plus = all(b_plus)
    has_minus = all(b_minus)
    return ColoringAudit(
        k=k,
        acyclic=not cyclic,
        cyclic_classes=cyclic,
        complete=not missing,
        missing_pairs=missing,
        b_plus=b_plus,
        b_minus=b_minus,
        is_b_coloring=has_plus and has_minus,
        positive_basis=[lst[0] for lst in b_plus] if has_plus else None,
        negative_basis=[lst[0] for lst in b_minus] if has_minus else None,
    )


def _check_order(d: Digraph, order: Optional[Sequence[int]]) -> list[int]:
    if order is None:
        return list(d.vertices)
    seq = [int(v) for v in order]
    if sorted(seq) != list(d.vertices):
        raise InvalidColoring("order must be a permutation of the vertices", details={"order": seq})
    return seq


def greedy_acyclic(
    d: Digraph,
    order: Optional[Sequence[int]] = None,
    *,
    precolored: Optional[Sequence[Optional[int]]] = None,
    max_colors: Optional[int] = None,
) -> Coloring:
    """
    Жадная ацикличная раскраска: каждой вершине — наименьший цвет, класс которого
    остаётся ацикличным. Предраскрашенные вершины не трогаются; max_colors ограничивает палитру.
    """
    seq = _check_order(d, order)
    colors: list[Optional[int]] = [None] * d.n
    classes: list[int] = []
    if precolored is not None:
        if len(precolored) != d.n:
            raise InvalidColoring("precoloring length differs from n", details={"length": len(precolored), "n": d.n})
        top = max((x for x in precolored if x is not None), default=-1)
        classes = [0] * (max(top + 1, max_colors or 0))
        for v, x in enumerate(precolored):
            if x is not None:
                colors[v] = x
                classes[x] |= 1 << v

    for v in seq:
        if colors[v] is not None:
            continue
        for c, mask in enumerate(classes):
            if not closes_cycle(d, mask, v):
                break
        else:
            if max_colors is not None and len(classes) >= max_colors:
                raise PreconditionFailed(
                    f"vertex {v} cannot be colored within {max_colors} colors",
                    details={"vertex": v, "max_colors": max_colors},
                )
            classes.append(0)
            c = len(classes) - 1
        colors[v] = c
        classes[c] |= 1 << v
    return Coloring(tuple(colors))  # type: ignore[arg-type]


def b_reduce(d: Digraph, c: Coloring) -> Coloring:
    """
    Эвристика сокращения цветов: пока есть класс без b⁺- (или b⁻-) вершины,
    каждая его вершина уходит в наименьший класс, где у неё нет out- (in-) соседей,
    а опустевший класс удаляется.
    """
    first = audit(d, c)
    if not first.acyclic:
        raise PreconditionFailed(
            "b_reduce requires an acyclic coloring",
            details={"cyclic_classes": first.cyclic_classes},
        )
    current, report = c, first
    while True:
        failing = next(
            (i for i in range(current.k) if not report.b_plus[i] or not report.b_minus[i]),
            None,
        )
        if failing is None:
            return current
        use_out = not report.b_plus[failing]
        rows = d.out_rows if use_out else d.in_rows
        classes = current.classes
        colors = list(current.colors)
        for v in iter_bits(classes[failing]):
            target = next(j for j in range(current.k) if j != failing and not rows[v] & classes[j])
            colors[v] = target
        colors = [x - 1 if x > failing else x for x in colors]
        logger.debug(
            "[B-REDUCE] removed class=%d side=%s k=%d->%d",
            failing, "plus" if use_out else "minus", current.k, current.k - 1,
        )
        current = Coloring(tuple(colors))
        report = audit(d, current)
