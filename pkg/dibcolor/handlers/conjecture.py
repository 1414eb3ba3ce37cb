# dibcolor/handlers/conjecture.py
from __future__ import annotations

import argparse
import logging
from typing import TextIO

from dibcolor.db_repo.unit_of_work import new_uow
from dibcolor.reports.schemas import catalog_payload
from dibcolor.services.conjecture import conjecture_scan

from . import Router, arg
from .common import JSON_ARG, emit

logger = logging.getLogger(__name__)

router = Router(name="conjecture")


@router.command(
    "conjecture",
    help="каталоги 1- и 2-регулярных орграфов, разбитые по значению dib",
    arguments=[
        arg("--order-max", type=int, required=True),
        arg("--order-min", type=int, default=3),
        arg("--only-two-regular", action="store_true"),
        arg("--threads", type=int, default=None),
        arg("--save", action="store_true", help="записать каталог в базу"),
        JSON_ARG,
    ],
)
def cmd_conjecture(args: argparse.Namespace, out: TextIO) -> int:
    catalogs = conjecture_scan(
        args.order_max,
        n_min=args.order_min,
        include_one_regular=not args.only_two_regular,
        threads=args.threads,
    )
    if args.save:
        with new_uow() as uow:
            for cat in catalogs:
                for dib, members in cat.by_dib.items():
                    for d6 in members:
                        uow.catalog.upsert(n=cat.n, r=cat.r, d6=d6, dib=dib)
        logger.info("[CATALOG SAVED] catalogs=%d", len(catalogs))
    if args.json:
        emit(out, args, [catalog_payload(c) for c in catalogs])
    else:
        for cat in catalogs:
            counts = " ".join(f"dib{k}={v}" for k, v in cat.counts.items())
            out.write(f"n={cat.n} r={cat.r} total={cat.total} {counts}\n")
            for d6 in cat.by_dib.get(2, []) if cat.r == 2 else []:
                out.write(f"  {d6}\n")
    return 0
