# dibcolor/handlers/solve.py
from __future__ import annotations

import argparse
import logging
from typing import TextIO

from dibcolor.reports.schemas import solve_payload
from dibcolor.services.solvers import solve

from . import Router, arg
from .common import INPUT_ARGS, JSON_ARG, digraph_from_args, emit

logger = logging.getLogger(__name__)

router = Router(name="solve")


@router.command(
    "solve",
    help="точное значение dc, dac или dib со свидетелем",
    arguments=[*INPUT_ARGS, arg("--param", choices=("dc", "dac", "dib"), required=True), JSON_ARG],
)
def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    d = digraph_from_args(args)
    outcome = solve(d, args.param)
    logger.info("[SOLVE] param=%s n=%d value=%d nodes=%d", outcome.parameter, d.n, outcome.value, outcome.node_count)
    if args.json:
        emit(out, args, solve_payload(outcome), d)
    else:
        out.write(f"{outcome.parameter}={outcome.value}\n")
        out.write("witness=" + " ".join(map(str, outcome.witness.as_list())) + "\n")
    return 0
