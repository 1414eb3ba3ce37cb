# dibcolor/reports/schemas.py
from __future__ import annotations

from typing import Any, Optional, Union

from pydantic import BaseModel

from dibcolor.services.bounds import BoundsReport
from dibcolor.services.codec import encode_d6
from dibcolor.services.coloring import ColoringAudit
from dibcolor.services.conjecture import RegularCatalog
from dibcolor.services.digraph import Digraph
from dibcolor.services.solvers import SolveOutcome
from dibcolor.services.sweeps import SweepReport

SCHEMA_VERSION = 1


class DigraphSummary(BaseModel):
    n: int
    m: int
    d6: Optional[str] = None


class SolvePayload(BaseModel):
    kind: str = "solve"
    parameter: str
    value: int
    witness: list[int]
    start_bound: int
    bound_sources: list[str]
    exhausted: list[int]
    node_count: int


class AuditPayload(BaseModel):
    kind: str = "audit"
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


class BoundPayload(BaseModel):
    parameter: str
    kind: str
    value: int
    source: str


class BoundsPayload(BaseModel):
    kind: str = "bounds"
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
    bounds: list[BoundPayload]
    best: dict[str, dict[str, int]]
    strong_components: Optional[int] = None
    ng_slack: Optional[int] = None
    chain_consistent: bool


class SweepPayload(BaseModel):
    kind: str = "sweep"
    property: str
    corpus: str
    checked: int
    failed: int
    verified: bool
    counterexamples: list[str]
    witnesses: list[str]


class CatalogPayload(BaseModel):
    kind: str = "catalog"
    n: int
    r: int
    counts: dict[int, int]
    by_dib: dict[int, list[str]]


class ConstructPayload(BaseModel):
    kind: str = "construct"
    method: str
    coloring: list[int]
    audit: AuditPayload


Payload = Union[SolvePayload, AuditPayload, BoundsPayload, ConstructPayload, list[SweepPayload], list[CatalogPayload], dict[str, Any]]


class JsonReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: list[str]
    digraph: Optional[DigraphSummary] = None
    payload: Payload


# ---------- конвертеры ----------

def digraph_summary(d: Digraph) -> DigraphSummary:
    return DigraphSummary(n=d.n, m=d.m, d6=encode_d6(d))


def solve_payload(o: SolveOutcome) -> SolvePayload:
    return SolvePayload(
        parameter=o.parameter,
        value=o.value,
        witness=o.witness.as_list(),
        start_bound=o.start_bound,
        bound_sources=list(o.bound_sources),
        exhausted=list(o.exhausted),
        node_count=o.node_count,
    )


def audit_payload(a: ColoringAudit) -> AuditPayload:
    return AuditPayload(
        k=a.k,
        acyclic=a.acyclic,
        cyclic_classes=a.cyclic_classes,
        complete=a.complete,
        missing_pairs=a.missing_pairs,
        b_plus=a.b_plus,
        b_minus=a.b_minus,
        is_b_coloring=a.is_b_coloring,
        positive_basis=a.positive_basis,
        negative_basis=a.negative_basis,
    )


def bounds_payload(r: BoundsReport) -> BoundsPayload:
    best = {p: {"lower": r.lower(p), "upper": r.upper(p)} for p in ("dc", "dib", "dac")}
    return BoundsPayload(
        n=r.n, m=r.m,
        max_out_degree=r.max_out_degree, max_in_degree=r.max_in_degree, delta=r.delta,
        omega=r.omega, beta=r.beta, acyclic_number=r.acyclic_number,
        t_plus=r.t_plus, t_minus=r.t_minus, t=r.t,
        dart_bound=r.dart_bound,
        bounds=[BoundPayload(parameter=b.parameter, kind=b.kind, value=b.value, source=b.source) for b in r.bounds],
        best=best,
        strong_components=r.strong_components,
        ng_slack=r.ng_slack,
        chain_consistent=r.chain_consistent,
    )


def sweep_payload(s: SweepReport) -> SweepPayload:
    return SweepPayload(
        property=s.property,
        corpus=s.corpus,
        checked=s.checked,
        failed=s.failed,
        verified=s.verified,
        counterexamples=s.counterexamples,
        witnesses=s.witnesses,
    )


def catalog_payload(c: RegularCatalog) -> CatalogPayload:
    return CatalogPayload(n=c.n, r=c.r, counts=c.counts, by_dib=c.by_dib)


def render(report: JsonReport) -> str:
    return report.model_dump_json(indent=2)
