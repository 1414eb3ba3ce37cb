# dibcolor/services/invariants.py
from __future__ import annotations

from typing import NamedTuple

import networkx as nx

from .digraph import Digraph, closes_cycle, iter_bits
from .errors import ParameterUndefined


class TBound(NamedTuple):
    t_plus: int
    t_minus: int
    t: int


def _symmetric_graph(d: Digraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(d.vertices)
    g.add_edges_from((u, v) for u, v in d.darts if u < v and d.has_dart(v, u))
    return g


def _independence_graph(d: Digraph) -> nx.Graph:
    # ребро там, где нет дуги ни в одну сторону
    g = nx.Graph()
    g.add_nodes_from(d.vertices)
    g.add_edges_from(
        (u, v) for u in d.vertices for v in range(u + 1, d.n) if not d.weak_rows[u] >> v & 1
    )
    return g


def max_clique(d: Digraph) -> list[int]:
    clique, _ = nx.max_weight_clique(_symmetric_graph(d), weight=None)
    return sorted(clique)


def clique_number(d: Digraph) -> int:
    """ω(D): наибольшее полное симметричное индуцированное подмножество."""
    return len(max_clique(d))


def max_independent_set(d: Digraph) -> list[int]:
    clique, _ = nx.max_weight_clique(_independence_graph(d), weight=None)
    return sorted(clique)


def independence_number(d: Digraph) -> int:
    """β(D)."""
    return len(max_independent_set(d))


def _greedy_acyclic_set(d: Digraph, order: list[int]) -> int:
    mask = 0
    for v in order:
        if not closes_cycle(d, mask, v):
            mask |= 1 << v
    return mask


def max_acyclic_set(d: Digraph) -> int:
    """
    Маска наибольшего множества вершин, индуцирующего ацикличный подорграф.
    Ветвление «взять/не взять» по вершинам в порядке возрастания степени,
    отсечение по |текущее| + |осталось| <= лучшее.
    """
    n = d.n
    order = sorted(d.vertices, key=lambda v: (d.out_degrees[v] + d.in_degrees[v], v))
    best = _greedy_acyclic_set(d, order)
    best_size = best.bit_count()

    def search(idx: int, cur: int, size: int) -> None:
        nonlocal best, best_size
        if size + (n - idx) <= best_size:
            return
        if idx == n:
            best, best_size = cur, size
            return
        v = order[idx]
        if not closes_cycle(d, cur, v):
            search(idx + 1, cur | 1 << v, size + 1)
        search(idx + 1, cur, size)

    search(0, 0, 0)
    return best


def acyclic_number(d: Digraph) -> int:
    """𝒜(D)."""
    return max_acyclic_set(d).bit_count()


def acyclic_members(d: Digraph) -> list[int]:
    return list(iter_bits(max_acyclic_set(d)))


def _t_side(degrees: tuple[int, ...]) -> int:
    ordered = sorted(degrees, reverse=True)
    return max(i for i in range(1, len(ordered) + 1) if ordered[i - 1] >= i - 1)


def t_bound(d: Digraph) -> TBound:
    """t⁺, t⁻ и t = min(t⁺, t⁻) по отсортированным out/in-степеням."""
    if d.n == 0:
        raise ParameterUndefined("t(D) is undefined for the empty digraph", details={"n": 0})
    t_plus = _t_side(d.out_degrees)
    t_minus = _t_side(d.in_degrees)
    return TBound(t_plus, t_minus, min(t_plus, t_minus))
