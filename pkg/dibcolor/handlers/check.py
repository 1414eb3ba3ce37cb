# dibcolor/handlers/check.py
from __future__ import annotations

import argparse
from typing import TextIO

from dibcolor.reports.schemas import audit_payload
from dibcolor.services.codec import read_coloring
from dibcolor.services.coloring import audit

from . import Router, arg
from .common import INPUT_ARGS, JSON_ARG, digraph_from_args, emit

router = Router(name="check")


def _mark(ok: bool) -> str:
    return "yes" if ok else "no"


@router.command(
    "check",
    help="проверить раскраску: ацикличность, полнота, b⁺/b⁻-вершины",
    arguments=[*INPUT_ARGS, arg("--coloring", required=True, help="JSON-массив цветов"), JSON_ARG],
)
def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    d = digraph_from_args(args)
    report = audit(d, read_coloring(args.coloring))
    if args.json:
        emit(out, args, audit_payload(report), d)
        return 0
    out.write(f"k={report.k}\n")
    out.write(f"acyclic={_mark(report.acyclic)}\n")
    out.write(f"complete={_mark(report.complete)}\n")
    out.write(f"b_coloring={_mark(report.is_b_coloring)}\n")
    if report.cyclic_classes:
        out.write("cyclic_classes=" + " ".join(map(str, report.cyclic_classes)) + "\n")
    if report.missing_pairs:
        out.write("missing_pairs=" + " ".join(f"{i}->{j}" for i, j in report.missing_pairs) + "\n")
    return 0
