# dibcolor/handlers/construct.py
from __future__ import annotations

import argparse
import logging
from typing import TextIO

from dibcolor.reports.schemas import ConstructPayload, audit_payload
from dibcolor.services.codec import encode_coloring
from dibcolor.services.coloring import Coloring, audit
from dibcolor.services.constructions import (
    color_circulant_path,
    color_circulant_tournament,
    color_transitive,
    spread_vertices,
    theorem5_coloring,
    theorem9_coloring,
)
from dibcolor.services.digraph import Digraph, is_regular
from dibcolor.services.errors import PreconditionFailed
from dibcolor.services.families import Family, FamilySpec, generate, parse_family

from . import Router, arg
from .common import JSON_ARG, emit

logger = logging.getLogger(__name__)

router = Router(name="construct")

METHODS = ("auto", "transitive", "circulant-tournament", "circulant-path", "spread", "acyclic-set")


def _consecutive_jumps(spec: FamilySpec) -> int:
    """k, если J = {1..k}, иначе 0."""
    k = len(spec.jumps)
    return k if spec.jumps == tuple(range(1, k + 1)) else 0


def _spread(d: Digraph) -> Coloring:
    if not is_regular(d):
        raise PreconditionFailed("spread construction needs a regular digraph", details={"n": d.n})
    r = d.out_degrees[0] if d.n else 0
    bases = spread_vertices(d, r)
    if bases is None:
        raise PreconditionFailed(
            f"no {r + 1} vertices at pairwise weak distance >= 4",
            details={"n": d.n, "r": r},
        )
    return theorem9_coloring(d, *bases)


def pick_method(spec: FamilySpec) -> str:
    if spec.family is Family.TRANSITIVE_TOURNAMENT:
        return "transitive"
    if spec.family is Family.CIRCULANT:
        k = _consecutive_jumps(spec)
        if k and spec.n == 2 * k + 1:
            return "circulant-tournament"
        if k and spec.n >= 4 and k <= (spec.n - 2) // 2:
            return "circulant-path"
    if spec.family in (Family.DIRECTED_CYCLE, Family.RANDOM_REGULAR):
        return "spread"
    return "acyclic-set"


def build_coloring(spec: FamilySpec, d: Digraph, method: str) -> Coloring:
    if method == "transitive":
        return color_transitive(spec.n)
    if method == "circulant-tournament":
        if spec.n % 2 == 0:
            raise PreconditionFailed("circulant tournament needs odd n", details={"n": spec.n})
        return color_circulant_tournament(spec.n // 2)
    if method == "circulant-path":
        k = _consecutive_jumps(spec)
        if not k:
            raise PreconditionFailed("circulant path needs J = {1..k}", details={"jumps": list(spec.jumps)})
        return color_circulant_path(spec.n, k)
    if method == "spread":
        return _spread(d)
    return theorem5_coloring(d)


@router.command(
    "construct",
    help="раскраска в замкнутой форме или по построению для семейства",
    arguments=[
        arg("family", nargs="?", help="спецификация семейства"),
        arg("--family", dest="family_opt"),
        arg("--method", choices=METHODS, default="auto"),
        arg("--emit-coloring", action="store_true", help="вывести только JSON-массив цветов"),
        JSON_ARG,
    ],
)
def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    text = args.family_opt or args.family
    if not text:
        raise PreconditionFailed("construct needs a family spec", details={})
    spec = parse_family(text)
    d = generate(spec)
    method = pick_method(spec) if args.method == "auto" else args.method
    coloring = build_coloring(spec, d, method)
    report = audit(d, coloring)
    logger.info("[CONSTRUCT] family=%s method=%s k=%d b=%s", spec.text, method, coloring.k, report.is_b_coloring)
    if args.emit_coloring:
        out.write(encode_coloring(coloring) + "\n")
    elif args.json:
        emit(out, args, ConstructPayload(method=method, coloring=coloring.as_list(), audit=audit_payload(report)), d)
    else:
        out.write(f"method={method} k={coloring.k} acyclic={report.acyclic} b_coloring={report.is_b_coloring}\n")
        out.write(" ".join(map(str, coloring.as_list())) + "\n")
    return 0
