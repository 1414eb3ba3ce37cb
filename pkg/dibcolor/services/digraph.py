# dibcolor/services/digraph.py
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import AbstractSet, Iterable, Iterator, Optional, Sequence, Union

import networkx as nx

from .errors import InvalidDigraph

Dart = tuple[int, int]
VertexSet = Union[AbstractSet[int], Sequence[int]]


def iter_bits(mask: int) -> Iterator[int]:
    """Индексы установленных битов по возрастанию."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Digraph:
    """
    Простой орграф без петель на вершинах 0..n-1.
    Строки смежности (out/in) хранятся битовыми масками и строятся один раз.
    """

    n: int
    darts: frozenset[Dart]
    out_rows: tuple[int, ...] = field(init=False, compare=False, repr=False)
    in_rows: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidDigraph(f"vertex count must be >= 0, got {self.n}", details={"n": self.n})
        out_rows = [0] * self.n
        in_rows = [0] * self.n
        for u, v in self.darts:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidDigraph(
                    f"dart ({u},{v}) out of range for n={self.n}",
                    details={"dart": [u, v], "n": self.n},
                )
            if u == v:
                raise InvalidDigraph(f"loop ({u},{v}) is not allowed", details={"dart": [u, v]})
            out_rows[u] |= 1 << v
            in_rows[v] |= 1 << u
        object.__setattr__(self, "out_rows", tuple(out_rows))
        object.__setattr__(self, "in_rows", tuple(in_rows))

    # ---------- размеры и степени ----------

    @property
    def m(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def out_degree(self, v: int) -> int:
        return self.out_rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_rows[v].bit_count()

    def out_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.out_rows[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.in_rows[v]))

    def has_dart(self, u: int, v: int) -> bool:
        return bool(self.out_rows[u] >> v & 1)

    def is_symmetric_dart(self, u: int, v: int) -> bool:
        return self.has_dart(u, v) and self.has_dart(v, u)

    @cached_property
    def out_degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.out_rows)

    @cached_property
    def in_degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.in_rows)

    @property
    def max_out_degree(self) -> int:
        return max(self.out_degrees, default=0)

    @property
    def max_in_degree(self) -> int:
        return max(self.in_degrees, default=0)

    @property
    def delta(self) -> int:
        """Δ = min(Δ⁺, Δ⁻)."""
        return min(self.max_out_degree, self.max_in_degree)

    @cached_property
    def sym_rows(self) -> tuple[int, ...]:
        # соседи по симметричным дугам (дигонам)
        return tuple(o & i for o, i in zip(self.out_rows, self.in_rows))

    @cached_property
    def weak_rows(self) -> tuple[int, ...]:
        return tuple(o | i for o, i in zip(self.out_rows, self.in_rows))

    def sorted_darts(self) -> list[Dart]:
        return sorted(self.darts)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, darts={self.sorted_darts()})"


# ---------- построение ----------

def build(n: int, darts: Iterable[Sequence[int]]) -> Digraph:
    """Собрать орграф из списка пар; дубликаты схлопываются, петли и выход за диапазон отвергаются."""
    seen: set[Dart] = set()
    for pair in darts:
        u, v = int(pair[0]), int(pair[1])
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def from_rows(out_rows: Sequence[int]) -> Digraph:
    n = len(out_rows)
    darts = frozenset((u, v) for u in range(n) for v in iter_bits(out_rows[u]))
    return Digraph(n, darts)


def complement(d: Digraph) -> Digraph:
    full = d.all_mask
    return from_rows([full & ~(1 << v) & ~d.out_rows[v] for v in d.vertices])


def converse(d: Digraph) -> Digraph:
    return Digraph(d.n, frozenset((v, u) for u, v in d.darts))


def _ordered_members(d: Digraph, s: VertexSet) -> list[int]:
    if isinstance(s, (set, frozenset)):
        members = sorted(s)
    else:
        members = [int(x) for x in s]
    if len(set(members)) != len(members):
        raise InvalidDigraph("vertex set has repeated members", details={"members": members})
    for v in members:
        if not 0 <= v < d.n:
            raise InvalidDigraph(f"vertex {v} out of range for n={d.n}", details={"vertex": v, "n": d.n})
    return members


def induced(d: Digraph, s: VertexSet) -> Digraph:
    """Индуцированный подорграф; вершины перенумеровываются 0..|S|-1 в порядке S."""
    members = _ordered_members(d, s)
    pos = {v: i for i, v in enumerate(members)}
    darts = frozenset((pos[u], pos[v]) for u, v in d.darts if u in pos and v in pos)
    return Digraph(len(members), darts)


def relabel(d: Digraph, perm: Sequence[int]) -> Digraph:
    """perm[v] — новая метка вершины v."""
    return Digraph(d.n, frozenset((perm[u], perm[v]) for u, v in d.darts))


# ---------- ацикличность ----------

def mask_is_acyclic(d: Digraph, mask: int) -> bool:
    """Алгоритм Кана на подмножестве вершин, заданном маской."""
    remaining = mask
    in_rows = d.in_rows
    while remaining:
        sources = 0
        for v in iter_bits(remaining):
            if not in_rows[v] & remaining:
                sources |= 1 << v
        if not sources:
            return False
        remaining &= ~sources
    return True


def closes_cycle(d: Digraph, class_mask: int, v: int) -> bool:
    """
    Замкнёт ли добавление v в ацикличный класс class_mask ориентированный цикл.
    Цикл появляется, если из out-соседей v внутри класса достижим in-сосед v.
    """
    target = d.in_rows[v] & class_mask
    frontier = d.out_rows[v] & class_mask
    if not target or not frontier:
        return False
    seen = frontier
    out_rows = d.out_rows
    while frontier:
        if frontier & target:
            return True
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= out_rows[u]
        frontier = nxt & class_mask & ~seen
        seen |= frontier
    return False


def is_acyclic(d: Digraph) -> bool:
    return mask_is_acyclic(d, d.all_mask)


def topological_order(d: Digraph) -> Optional[list[int]]:
    """Топологический порядок (источники с меньшим индексом первыми) или None при наличии цикла."""
    remaining = d.all_mask
    order: list[int] = []
    while remaining:
        for v in iter_bits(remaining):
            if not d.in_rows[v] & remaining:
                order.append(v)
                remaining &= ~(1 << v)
                break
        else:
            return None
    return order


# ---------- компоненты и расстояния ----------

def to_networkx(d: Digraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices)
    g.add_edges_from(d.sorted_darts())
    return g


def strong_condensation(d: Digraph) -> tuple[tuple[int, ...], Digraph]:
    """
    Разметка вершин по сильным компонентам и конденсация D̃.
    Номера компонент идут в топологическом порядке D̃ (ничьи — по наименьшей вершине),
    так что все дуги конденсации ведут от меньшего номера к большему.
    """
    g = to_networkx(d)
    cond = nx.condensation(g)
    order = list(nx.lexicographical_topological_sort(cond, key=lambda c: min(cond.nodes[c]["members"])))
    comp_id = {c: i for i, c in enumerate(order)}
    mapping = cond.graph["mapping"]
    labels = tuple(comp_id[mapping[v]] for v in d.vertices)
    darts = frozenset((labels[u], labels[v]) for u, v in d.darts if labels[u] != labels[v])
    return labels, Digraph(len(order), darts)


def closed_ball(d: Digraph, v: int, radius: int) -> int:
    """Маска вершин на слабом расстоянии <= radius от v."""
    seen = 1 << v
    frontier = seen
    for _ in range(radius):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= d.weak_rows[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


def weak_distance(d: Digraph, u: int, v: int) -> Union[int, float]:
    """Длина кратчайшего пути без учёта ориентации; math.inf для разных слабых компонент."""
    for x in (u, v):
        if not 0 <= x < d.n:
            raise InvalidDigraph(f"vertex {x} out of range for n={d.n}", details={"vertex": x, "n": d.n})
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    dist = 0
    while frontier:
        dist += 1
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= d.weak_rows[w]
        frontier = nxt & ~seen
        if frontier >> v & 1:
            return dist
        seen |= frontier
    return math.inf


def is_regular(d: Digraph, r: Optional[int] = None) -> bool:
    """deg⁺(v) = deg⁻(v) = r для всех v (r по умолчанию берётся из вершины 0)."""
    if d.n == 0:
        return True
    if r is None:
        r = d.out_degrees[0]
    return all(o == r for o in d.out_degrees) and all(i == r for i in d.in_degrees)


def is_tournament(d: Digraph) -> bool:
    for u in d.vertices:
        for v in range(u + 1, d.n):
            if d.has_dart(u, v) == d.has_dart(v, u):
                return False
    return True
