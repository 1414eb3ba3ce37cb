# dibcolor/services/bounds.py
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Literal, Optional

from .digraph import Digraph, is_tournament, strong_condensation
from .errors import ParameterUndefined
from .invariants import acyclic_number, clique_number, independence_number, t_bound

BoundKind = Literal["lower", "upper"]
ParamName = Literal["dc", "dac", "dib"]


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def dart_bound(m: int) -> int:
    """Наибольшее k с k(k-1) <= m, то есть ⌊(1+√(1+4m))/2⌋ без плавающей точки."""
    return (isqrt(4 * m + 1) + 1) // 2


def thm4_bound(n: int, omega: int) -> int:
    return (n + omega) // 2


def cor6_bound(n: int, acyclic: int) -> int:
    # ⌈n - 𝒜/2⌉ = ⌈(2n - 𝒜)/2⌉
    return ceil_div(2 * n - acyclic, 2)


def cor3_bound(n: int, beta: int) -> int:
    return n - beta + 1


def thm5_lower(n: int, acyclic: int) -> int:
    return ceil_div(n, acyclic)


def thm5_upper(n: int, acyclic: int) -> int:
    return n - acyclic + 1


@dataclass
class Bound:
    parameter: ParamName
    kind: BoundKind
    value: int
    source: str


@dataclass
class BoundsReport:
    n: int
    m: int
    max_out_degree: int
    max_in_degree: int
    delta: int
    omega: int
    beta: int
    acyclic_number: int
    t_plus: int
    t_minus: int
    t: int
    dart_bound: int
    bounds: list[Bound] = field(default_factory=list)
    strong_components: Optional[int] = None
    ng_slack: Optional[int] = None
    chain_consistent: bool = True

    def upper(self, parameter: ParamName) -> int:
        return min(b.value for b in self.bounds if b.parameter == parameter and b.kind == "upper")

    def lower(self, parameter: ParamName) -> int:
        return max(b.value for b in self.bounds if b.parameter == parameter and b.kind == "lower")

    def upper_sources(self, parameter: ParamName) -> list[str]:
        best = self.upper(parameter)
        return [b.source for b in self.bounds if b.parameter == parameter and b.kind == "upper" and b.value == best]


def bounds_report(
    d: Digraph,
    *,
    dc: Optional[int] = None,
    dib: Optional[int] = None,
    complement_dib: Optional[int] = None,
) -> BoundsReport:
    """
    Все нижние и верхние оценки dc/dib/dac с тегом происхождения.
    Точные значения (dc, dib, dib дополнения), если переданы, добавляют
    цепочечные оценки и запас Нордхауза–Гаддума.
    """
    if d.n == 0:
        raise ParameterUndefined("bounds are undefined for the empty digraph", details={"n": 0})
    n, m = d.n, d.m
    omega = clique_number(d)
    beta = independence_number(d)
    acyc = acyclic_number(d)
    tb = t_bound(d)
    db = dart_bound(m)

    report = BoundsReport(
        n=n, m=m,
        max_out_degree=d.max_out_degree, max_in_degree=d.max_in_degree, delta=d.delta,
        omega=omega, beta=beta, acyclic_number=acyc,
        t_plus=tb.t_plus, t_minus=tb.t_minus, t=tb.t,
        dart_bound=db,
    )
    add = report.bounds.append

    # ω <= dc и ⌈n/𝒜⌉ <= dc переносятся на dib и dac по цепочке dc <= dib <= dac
    for source, value in (("omega_dc", omega), ("thm5_lower", thm5_lower(n, acyc))):
        for param in ("dc", "dib", "dac"):
            add(Bound(param, "lower", value, source))
    if is_tournament(d):
        labels, _ = strong_condensation(d)
        k = max(labels) + 1
        report.strong_components = k
        add(Bound("dib", "lower", ceil_div(k, 2), "condensation_half"))
        add(Bound("dac", "lower", ceil_div(k, 2), "condensation_half"))

    add(Bound("dc", "upper", thm5_upper(n, acyc), "thm5_upper"))

    dac_uppers = [
        ("dart_bound", db),
        ("thm4", thm4_bound(n, omega)),
        ("cor6", cor6_bound(n, acyc)),
    ]
    dib_uppers = [
        ("eq2_delta", d.delta + 1),
        ("thm1_t", tb.t),
        ("cor3_beta", cor3_bound(n, beta)),
    ] + dac_uppers
    for source, value in dib_uppers:
        add(Bound("dib", "upper", value, source))
    for source, value in dac_uppers:
        add(Bound("dac", "upper", value, source))

    if dc is not None:
        add(Bound("dib", "lower", dc, "eq1_dc"))
        add(Bound("dac", "lower", dc, "eq1_dc"))
        if report.strong_components is not None:
            add(Bound("dib", "lower", ceil_div(n, 2 * dc), "cor8_tournament"))
    if dib is not None:
        add(Bound("dac", "lower", dib, "eq1_dib"))
        add(Bound("dc", "upper", dib, "eq1_dib"))
        if complement_dib is not None:
            report.ng_slack = n + 1 - dib - complement_dib

    report.chain_consistent = all(
        report.lower(p) <= report.upper(p) for p in ("dc", "dib", "dac")
    ) and thm5_lower(n, acyc) <= thm5_upper(n, acyc)
    return report
