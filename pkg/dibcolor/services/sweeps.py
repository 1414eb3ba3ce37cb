# dibcolor/services/sweeps.py
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Literal, Optional, Sequence

from dibcolor.config import settings
from dibcolor.workers import run_chunked

from .bounds import BoundsReport, bounds_report, ceil_div, cor3_bound, cor6_bound, dart_bound, thm4_bound, thm5_lower, thm5_upper
from .codec import encode_d6
from .digraph import Digraph, complement, converse, induced, strong_condensation
from .enumeration import iter_all_digraphs, iter_tournaments
from .errors import LimitExceeded, UnknownProperty
from .families import random_digraph, random_tournament
from .solvers import dac_exact, dc_exact, dib_exact

logger = logging.getLogger(__name__)

Corpus = Literal["digraphs", "tournaments"]


@dataclass
class SweepReport:
    property: str
    corpus: str
    checked: int = 0
    failed: int = 0
    counterexamples: list[str] = field(default_factory=list)  # не больше SWEEP_WITNESS_LIMIT
    witnesses: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.failed == 0


class _Values:
    """Ленивые точные значения для одного орграфа и его производных."""

    def __init__(self, d: Digraph, memo: dict[str, "_Values"]) -> None:
        self.d = d
        self._memo = memo
        self._cache: dict[str, object] = {}

    @classmethod
    def of(cls, d: Digraph, memo: dict[str, "_Values"]) -> "_Values":
        key = encode_d6(d)
        if key not in memo:
            memo[key] = cls(d, memo)
        return memo[key]

    def _get(self, name: str, compute: Callable[[], object]):
        if name not in self._cache:
            self._cache[name] = compute()
        return self._cache[name]

    @property
    def report(self) -> BoundsReport:
        return self._get("report", lambda: bounds_report(self.d))

    @property
    def dc(self) -> int:
        return self._get("dc", lambda: dc_exact(self.d, self.report).value)

    @property
    def dib(self) -> int:
        return self._get("dib", lambda: dib_exact(self.d, self.report).value)

    @property
    def dac(self) -> int:
        return self._get("dac", lambda: dac_exact(self.d, self.report).value)

    def other(self, d: Digraph) -> "_Values":
        return _Values.of(d, self._memo)


# Проверка возвращает (выполнено, достигнуто равенство)
Check = Callable[[_Values], tuple[bool, bool]]


def _eq1_chain(x: _Values) -> tuple[bool, bool]:
    return x.dc <= x.dib <= x.dac, x.dc == x.dac


def _eq2_delta(x: _Values) -> tuple[bool, bool]:
    bound = x.d.delta + 1
    return x.dib <= bound, x.dib == bound


def _thm1_t(x: _Values) -> tuple[bool, bool]:
    return x.dib <= x.report.t, x.dib == x.report.t


def _thm2_ng(x: _Values) -> tuple[bool, bool]:
    total = x.dib + x.other(complement(x.d)).dib
    return total <= x.d.n + 1, total == x.d.n + 1


def _cor3_beta(x: _Values) -> tuple[bool, bool]:
    bound = cor3_bound(x.d.n, x.report.beta)
    return x.dib <= bound, x.dib == bound


def _dart_bound(x: _Values) -> tuple[bool, bool]:
    bound = dart_bound(x.d.m)
    return x.dac <= bound, x.dac == bound


def _thm4(x: _Values) -> tuple[bool, bool]:
    bound = thm4_bound(x.d.n, x.report.omega)
    return x.dac <= bound, x.dac == bound


def _thm5(x: _Values) -> tuple[bool, bool]:
    lo = thm5_lower(x.d.n, x.report.acyclic_number)
    hi = thm5_upper(x.d.n, x.report.acyclic_number)
    return lo <= x.dc <= hi, x.dc in (lo, hi)


def _cor6(x: _Values) -> tuple[bool, bool]:
    bound = cor6_bound(x.d.n, x.report.acyclic_number)
    return x.dac <= bound, x.dac == bound


def _cor8_tournament(x: _Values) -> tuple[bool, bool]:
    product = 2 * x.dc * x.dib
    return x.d.n <= product, x.d.n == product


def _condensation_half(x: _Values) -> tuple[bool, bool]:
    labels, _ = strong_condensation(x.d)
    k = max(labels) + 1
    return k <= 2 * x.dib, x.dib == ceil_div(k, 2)


def _converse_invariance(x: _Values) -> tuple[bool, bool]:
    y = x.other(converse(x.d))
    return (x.dc, x.dib, x.dac) == (y.dc, y.dib, y.dac), False


def _eq3_monotone(x: _Values) -> tuple[bool, bool]:
    n = x.d.n
    best = 0
    for size in range(1, n):
        for s in combinations(range(n), size):
            best = max(best, x.other(induced(x.d, list(s))).dib)
    return best <= x.dib, best == x.dib


def _omega_dc(x: _Values) -> tuple[bool, bool]:
    return x.report.omega <= x.dc, x.report.omega == x.dc


def _beta_acyclic(x: _Values) -> tuple[bool, bool]:
    return x.report.beta <= x.report.acyclic_number, x.report.beta == x.report.acyclic_number


PROPERTIES: dict[str, tuple[Corpus, Check]] = {
    "eq1_chain": ("digraphs", _eq1_chain),
    "eq2_delta": ("digraphs", _eq2_delta),
    "thm1_t": ("digraphs", _thm1_t),
    "thm2_ng": ("digraphs", _thm2_ng),
    "cor3_beta": ("digraphs", _cor3_beta),
    "dart_bound": ("digraphs", _dart_bound),
    "thm4": ("digraphs", _thm4),
    "thm5": ("digraphs", _thm5),
    "cor6": ("digraphs", _cor6),
    "cor8_tournament": ("tournaments", _cor8_tournament),
    "condensation_half": ("tournaments", _condensation_half),
    "converse_invariance": ("digraphs", _converse_invariance),
    "eq3_monotone": ("digraphs", _eq3_monotone),
    "omega_dc": ("digraphs", _omega_dc),
    "beta_acyclic": ("digraphs", _beta_acyclic),
}


def _resolve(properties: Optional[Sequence[str]]) -> list[str]:
    names = list(PROPERTIES) if not properties else list(properties)
    for name in names:
        if name not in PROPERTIES:
            raise UnknownProperty(
                f"unknown property {name!r}",
                details={"property": name, "known": sorted(PROPERTIES)},
            )
    return names


def _corpus(kind: Corpus, n: int, sample: Optional[tuple[int, int]]) -> Iterable[Digraph]:
    if sample is None:
        return iter_tournaments(n) if kind == "tournaments" else iter_all_digraphs(n)
    budget, seed = sample
    rng = random.Random(f"{seed}:{kind}:{n}")
    if kind == "tournaments":
        return (random_tournament(n, rng.getrandbits(32)) for _ in range(budget))
    return (random_digraph(n, rng) for _ in range(budget))


def sweep_chunk(
    kind: Corpus, n: int, names: list[str], sample: Optional[tuple[int, int]]
) -> dict[str, tuple[int, int, list[str], list[str]]]:
    """Проверить свойства на всех орграфах порядка n одного корпуса."""
    memo: dict[str, _Values] = {}
    limit = settings.SWEEP_WITNESS_LIMIT
    out: dict[str, tuple[int, int, list[str], list[str]]] = {name: (0, 0, [], []) for name in names}
    for d in _corpus(kind, n, sample):
        x = _Values.of(d, memo)
        for name in names:
            checked, failed, bad, tight = out[name]
            holds, equal = PROPERTIES[name][1](x)
            if not holds:
                failed += 1
                if len(bad) < limit:
                    bad.append(encode_d6(d))
                logger.warning("[SWEEP] counterexample property=%s d6=%s", name, encode_d6(d))
            elif equal and len(tight) < limit:
                tight.append(encode_d6(d))
            out[name] = (checked + 1, failed, bad, tight)
    return out


def property_sweep(
    n_max: int,
    properties: Optional[Sequence[str]] = None,
    *,
    sample: Optional[tuple[int, int]] = None,
    n_min: int = 1,
    threads: Optional[int] = None,
) -> list[SweepReport]:
    """
    Проверка свойств на всех помеченных орграфах (или турнирах) порядков n_min..n_max;
    sample=(budget, seed) заменяет полный перебор на budget случайных экземпляров каждого порядка.
    """
    names = _resolve(properties)
    limit = settings.SWEEP_WITNESS_LIMIT
    limits = {"digraphs": settings.SWEEP_MAX_N_DIGRAPHS, "tournaments": settings.SWEEP_MAX_N_TOURNAMENTS}
    by_kind: dict[Corpus, list[str]] = {}
    for name in names:
        by_kind.setdefault(PROPERTIES[name][0], []).append(name)
    if sample is None:
        for kind in by_kind:
            if n_max > limits[kind]:
                raise LimitExceeded(
                    f"exhaustive {kind} sweep is limited to n <= {limits[kind]}; use sampling",
                    details={"n_max": n_max, "limit": limits[kind], "corpus": kind},
                )

    mode = f"sample {sample[0]} seed {sample[1]}" if sample else "exhaustive"
    reports = {name: SweepReport(name, f"{PROPERTIES[name][0]} n={n_min}..{n_max} {mode}") for name in names}
    for kind, kind_names in by_kind.items():
        chunks = [(kind, n, kind_names, sample) for n in range(n_min, n_max + 1)]
        for part in run_chunked(sweep_chunk, chunks, threads=threads, desc=f"sweep {kind}"):
            for name, (checked, failed, bad, tight) in part.items():
                rep = reports[name]
                rep.checked += checked
                rep.failed += failed
                rep.counterexamples.extend(bad[:max(limit - len(rep.counterexamples), 0)])
                rep.witnesses.extend(tight[:max(limit - len(rep.witnesses), 0)])
    for rep in reports.values():
        logger.info(
            "[SWEEP] property=%s checked=%d counterexamples=%d", rep.property, rep.checked, rep.failed
        )
    return [reports[name] for name in names]
