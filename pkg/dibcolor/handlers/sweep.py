# dibcolor/handlers/sweep.py
from __future__ import annotations

import argparse
import logging
from typing import TextIO

from dibcolor.db_repo.unit_of_work import new_uow
from dibcolor.reports.schemas import sweep_payload
from dibcolor.services.sweeps import PROPERTIES, property_sweep

from . import Router, arg
from .common import JSON_ARG, emit

logger = logging.getLogger(__name__)

router = Router(name="sweep")


@router.command(
    "sweep",
    help="проверить свойства на всех малых орграфах или на случайной выборке",
    arguments=[
        arg("--order-max", type=int, required=True),
        arg("--order-min", type=int, default=1),
        arg("--property", action="append", dest="properties", help=f"одно из: {', '.join(PROPERTIES)}"),
        arg("--sample", type=int, default=None, help="число случайных экземпляров на порядок"),
        arg("--seed", type=int, default=0),
        arg("--threads", type=int, default=None),
        arg("--save", action="store_true", help="записать итоги в базу"),
        JSON_ARG,
    ],
)
def cmd_sweep(args: argparse.Namespace, out: TextIO) -> int:
    sample = (args.sample, args.seed) if args.sample is not None else None
    reports = property_sweep(
        args.order_max,
        args.properties,
        sample=sample,
        n_min=args.order_min,
        threads=args.threads,
    )
    if args.save:
        with new_uow() as uow:
            for rep in reports:
                uow.sweep_runs.create(
                    property=rep.property,
                    corpus=rep.corpus,
                    checked=rep.checked,
                    counterexamples=rep.failed,
                    witnesses=rep.witnesses,
                )
        logger.info("[SWEEP SAVED] runs=%d", len(reports))
    if args.json:
        emit(out, args, [sweep_payload(r) for r in reports])
    else:
        for rep in reports:
            status = "ok" if rep.verified else f"FAILED ({rep.failed})"
            out.write(f"{rep.property}: checked={rep.checked} {status}\n")
    return 0 if all(r.verified for r in reports) else 1
