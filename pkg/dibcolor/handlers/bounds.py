# dibcolor/handlers/bounds.py
from __future__ import annotations

import argparse
from typing import TextIO

from dibcolor.reports.schemas import bounds_payload
from dibcolor.services.bounds import bounds_report
from dibcolor.services.digraph import complement
from dibcolor.services.solvers import dc_exact, dib_exact

from . import Router, arg
from .common import INPUT_ARGS, JSON_ARG, digraph_from_args, emit

router = Router(name="bounds")


@router.command(
    "bounds",
    help="все нижние и верхние оценки dc/dib/dac с источниками",
    arguments=[
        *INPUT_ARGS,
        arg("--exact", action="store_true", help="добавить точные dc, dib и dib дополнения"),
        JSON_ARG,
    ],
)
def cmd_bounds(args: argparse.Namespace, out: TextIO) -> int:
    d = digraph_from_args(args)
    if args.exact:
        base = bounds_report(d)
        report = bounds_report(
            d,
            dc=dc_exact(d, base).value,
            dib=dib_exact(d, base).value,
            complement_dib=dib_exact(complement(d)).value,
        )
    else:
        report = bounds_report(d)
    if args.json:
        emit(out, args, bounds_payload(report), d)
        return 0
    out.write(f"n={report.n} m={report.m} delta={report.delta} omega={report.omega} beta={report.beta} "
              f"acyclic={report.acyclic_number} t={report.t} dart_bound={report.dart_bound}\n")
    for p in ("dc", "dib", "dac"):
        out.write(f"{p}: {report.lower(p)}..{report.upper(p)} ({', '.join(report.upper_sources(p))})\n")
    if report.ng_slack is not None:
        out.write(f"ng_slack={report.ng_slack}\n")
    return 0
