# dibcolor/services/solvers.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .bounds import BoundsReport, ParamName, bounds_report
from .coloring import Coloring, audit, greedy_acyclic
from .digraph import Digraph, closes_cycle, is_acyclic, iter_bits, mask_of
from .errors import LimitExceeded, ParameterUndefined, PreconditionFailed

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 7


@dataclass
class SolveOutcome:
    parameter: ParamName
    value: int
    witness: Coloring
    start_bound: int
    bound_sources: list[str]
    exhausted: list[int] = field(default_factory=list)  # k, для которых доказана невыполнимость
    node_count: int = 0


class _Counter:
    __slots__ = ("nodes",)

    def __init__(self) -> None:
        self.nodes = 0


def _require_vertices(d: Digraph, parameter: str) -> None:
    if d.n == 0:
        raise ParameterUndefined(
            f"{parameter} is undefined for the empty digraph",
            details={"parameter": parameter, "n": 0},
        )


def _degree_order(d: Digraph) -> list[int]:
    return sorted(d.vertices, key=lambda v: (-(d.out_degrees[v] + d.in_degrees[v]), v))


# ---------- dc: ацикличное разбиение не более чем на k классов ----------

def acyclic_partition(d: Digraph, k: int, counter: Optional[_Counter] = None) -> Optional[Coloring]:
    counter = counter or _Counter()
    order = _degree_order(d)
    n = d.n
    colors = [-1] * n
    classes = [0] * k

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        counter.nodes += 1
        v = order[idx]
        # новый класс открывается только следующим по номеру
        for c in range(min(used + 1, k)):
            if c < used and closes_cycle(d, classes[c], v):
                continue
            colors[v] = c
            classes[c] |= 1 << v
            if place(idx + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    if not place(0, 0):
        return None
    return Coloring.compact(colors)


def dc_exact(d: Digraph, report: Optional[BoundsReport] = None) -> SolveOutcome:
    _require_vertices(d, "dc")
    report = report or bounds_report(d)
    lower = report.lower("dc")
    sources = [b.source for b in report.bounds if b.parameter == "dc" and b.kind == "lower" and b.value == lower]
    counter = _Counter()

    greedy = greedy_acyclic(d)
    if greedy.k == lower:
        return SolveOutcome("dc", lower, greedy, lower, sources, [], 0)

    exhausted: list[int] = []
    for k in range(lower, greedy.k):
        found = acyclic_partition(d, k, counter)
        logger.debug("[SOLVE] param=dc n=%d k=%d feasible=%s nodes=%d", d.n, k, found is not None, counter.nodes)
        if found is not None:
            return SolveOutcome("dc", found.k, found, lower, sources, exhausted, counter.nodes)
        exhausted.append(k)
    return SolveOutcome("dc", greedy.k, greedy, lower, sources, exhausted, counter.nodes)


# ---------- dac: полное ацикличное разбиение ровно на k классов ----------

def complete_acyclic_partition(d: Digraph, k: int, counter: Optional[_Counter] = None) -> Optional[Coloring]:
    counter = counter or _Counter()
    n = d.n
    if k > n:
        return None
    order = _degree_order(d)
    degree = [d.out_degrees[v] + d.in_degrees[v] for v in order]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + degree[i]
    need = k * (k - 1)
    colors = [-1] * n
    classes = [0] * k
    reach = [0] * k  # reach[i]: цвета j, в которые ведёт дуга из класса i

    def covered() -> int:
        return sum((reach[i] & ~(1 << i)).bit_count() for i in range(k))

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return used == k and covered() == need
        if n - idx < k - used:
            return False
        if need - covered() > suffix[idx]:
            return False
        counter.nodes += 1
        v = order[idx]
        for c in range(min(used + 1, k)):
            if c < used and closes_cycle(d, classes[c], v):
                continue
            saved = reach[:]
            colors[v] = c
            classes[c] |= 1 << v
            for u in d.out_neighbors(v):
                if colors[u] >= 0:
                    reach[c] |= 1 << colors[u]
            for w in d.in_neighbors(v):
                if colors[w] >= 0:
                    reach[colors[w]] |= 1 << c
            if place(idx + 1, max(used, c + 1)):
                return True
            reach[:] = saved
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    if not place(0, 0):
        return None
    return Coloring(tuple(colors))


def dac_exact(d: Digraph, report: Optional[BoundsReport] = None) -> SolveOutcome:
    _require_vertices(d, "dac")
    report = report or bounds_report(d)
    upper = report.upper("dac")
    sources = report.upper_sources("dac")
    counter = _Counter()
    exhausted: list[int] = []
    for k in range(upper, 0, -1):
        found = complete_acyclic_partition(d, k, counter)
        logger.debug("[SOLVE] param=dac n=%d k=%d feasible=%s nodes=%d", d.n, k, found is not None, counter.nodes)
        if found is not None:
            return SolveOutcome("dac", k, found, upper, sources, exhausted, counter.nodes)
        exhausted.append(k)
    raise RuntimeError(f"no complete acyclic coloring found for {d!r}")


# ---------- dib: ацикличная b-раскраска ровно в k цветов ----------

class _BColoringSearch:
    """
    Двухфазный поиск: сначала положительный и отрицательный базисы
    (кандидаты с deg⁺ >= k-1 и deg⁻ >= k-1), затем достраивание остальных вершин
    перебором с проверкой ацикличности классов и невыполненных b-обязательств.
    """

    def __init__(self, d: Digraph, k: int, counter: _Counter) -> None:
        self.d = d
        self.k = k
        self.counter = counter
        self.rank = {v: i for i, v in enumerate(_degree_order(d))}
        self.colors = [-1] * d.n
        self.classes = [0] * k
        self.colored = 0
        self.plus_basis = [0] * k
        self.minus_basis = [0] * k
        self.minus_cand = sorted(
            (v for v in d.vertices if d.in_degrees[v] >= k - 1), key=self.rank.__getitem__
        )

    def assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        self.classes[c] |= 1 << v
        self.colored |= 1 << v

    def unassign(self, v: int) -> None:
        self.classes[self.colors[v]] &= ~(1 << v)
        self.colored &= ~(1 << v)
        self.colors[v] = -1

    def obligation_ok(self, b: int, rows: tuple[int, ...]) -> bool:
        # недостающих цветов не больше, чем ещё не раскрашенных соседей
        own = self.colors[b]
        row = rows[b]
        seen = sum(1 for c in range(self.k) if c != own and row & self.classes[c])
        free = (row & ~self.colored).bit_count()
        return (self.k - 1) - seen <= free

    def run(self) -> Optional[Coloring]:
        d, k = self.d, self.k
        plus_cand = sorted(
            (v for v in d.vertices if d.out_degrees[v] >= k - 1), key=self.rank.__getitem__
        )
        if len(plus_cand) < k or len(self.minus_cand) < k:
            return None
        # классы взаимозаменяемы: положительный базис берём в порядке кандидатов
        for chosen in combinations(plus_cand, k):
            for i, u in enumerate(chosen):
                self.plus_basis[i] = u
                self.assign(u, i)
            if self.choose_minus(0):
                return Coloring(tuple(self.colors))
            for u in chosen:
                self.unassign(u)
        return None

    def choose_minus(self, i: int) -> bool:
        d = self.d
        if i == self.k:
            return self.start_extension()
        self.counter.nodes += 1
        u = self.plus_basis[i]
        if d.in_degrees[u] >= self.k - 1:
            self.minus_basis[i] = u
            if self.choose_minus(i + 1):
                return True
        for w in self.minus_cand:
            if self.colors[w] >= 0 or closes_cycle(d, self.classes[i], w):
                continue
            self.assign(w, i)
            self.minus_basis[i] = w
            if self.choose_minus(i + 1):
                return True
            self.unassign(w)
        return False

    def start_extension(self) -> bool:
        d = self.d
        if not all(self.obligation_ok(u, d.out_rows) for u in self.plus_basis):
            return False
        if not all(self.obligation_ok(w, d.in_rows) for w in self.minus_basis):
            return False
        plus_mask = mask_of(self.plus_basis)
        minus_mask = mask_of(self.minus_basis)
        basis_mask = plus_mask | minus_mask
        rest = [v for v in d.vertices if self.colors[v] < 0]
        rest.sort(key=lambda v: (-(d.weak_rows[v] & basis_mask).bit_count(), self.rank[v]))
        # для каждой вершины: базисные вершины, чьи обязательства зависят от её цвета
        watchers = [
            (list(iter_bits(d.in_rows[v] & plus_mask)), list(iter_bits(d.out_rows[v] & minus_mask)))
            for v in rest
        ]
        return self.extend(rest, watchers, 0)

    def extend(self, order: list[int], watchers: list[tuple[list[int], list[int]]], idx: int) -> bool:
        if idx == len(order):
            return True
        self.counter.nodes += 1
        d = self.d
        v = order[idx]
        watch_plus, watch_minus = watchers[idx]
        for c in range(self.k):
            if closes_cycle(d, self.classes[c], v):
                continue
            self.assign(v, c)
            if all(self.obligation_ok(u, d.out_rows) for u in watch_plus) and all(
                self.obligation_ok(w, d.in_rows) for w in watch_minus
            ):
                if self.extend(order, watchers, idx + 1):
                    return True
            self.unassign(v)
        return False


def b_coloring_exists(d: Digraph, k: int, counter: Optional[_Counter] = None) -> Optional[Coloring]:
    """Ацикличная b-раскраска ровно в k цветов или None, если её нет."""
    n = d.n
    if not 1 <= k <= n:
        raise PreconditionFailed(f"k must lie in 1..{n}, got {k}", details={"k": k, "n": n})
    if k == 1:
        return Coloring((0,) * n) if is_acyclic(d) else None
    return _BColoringSearch(d, k, counter or _Counter()).run()


def dib_exact(d: Digraph, report: Optional[BoundsReport] = None) -> SolveOutcome:
    """Спуск от наименьшей верхней оценки до первого k, допускающего ацикличную b-раскраску."""
    _require_vertices(d, "dib")
    report = report or bounds_report(d)
    upper = report.upper("dib")
    sources = report.upper_sources("dib")
    counter = _Counter()
    exhausted: list[int] = []
    for k in range(upper, 0, -1):
        found = b_coloring_exists(d, k, counter)
        logger.debug("[SOLVE] param=dib n=%d k=%d feasible=%s nodes=%d", d.n, k, found is not None, counter.nodes)
        if found is not None:
            return SolveOutcome("dib", k, found, upper, sources, exhausted, counter.nodes)
        exhausted.append(k)
    # раскраска в dc цветов всегда является b-раскраской, сюда попасть нельзя
    raise RuntimeError(f"no acyclic b-coloring found for {d!r}")


SOLVERS = {"dc": dc_exact, "dac": dac_exact, "dib": dib_exact}


def solve(d: Digraph, parameter: ParamName) -> SolveOutcome:
    try:
        solver = SOLVERS[parameter]
    except KeyError:
        raise PreconditionFailed(f"unknown parameter {parameter!r}", details={"parameter": parameter}) from None
    return solver(d)


# ---------- наивный оракул по всем разбиениям ----------

def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Все разбиения 0..n-1 в виде ограниченных растущих последовательностей."""
    if n == 0:
        yield ()
        return
    seq = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(seq)
            return
        for c in range(top + 2):
            seq[i] = c
            yield from rec(i + 1, max(top, c))

    seq[0] = 0
    yield from rec(1, 0)


@dataclass
class OracleValues:
    dc: int
    dac: int
    dib: int


def naive_oracle(d: Digraph) -> OracleValues:
    _require_vertices(d, "oracle")
    if d.n > ORACLE_MAX_N:
        raise LimitExceeded(f"oracle limited to n <= {ORACLE_MAX_N}", details={"n": d.n})
    dc, dac, dib = d.n + 1, 0, 0
    for colors in set_partitions(d.n):
        a = audit(d, Coloring(colors))
        if not a.acyclic:
            continue
        dc = min(dc, a.k)
        if a.complete:
            dac = max(dac, a.k)
        if a.is_b_coloring:
            dib = max(dib, a.k)
    return OracleValues(dc=dc, dac=dac, dib=dib)
