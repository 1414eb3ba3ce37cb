# dibcolor/handlers/history.py
from __future__ import annotations

import argparse
import json
from typing import TextIO

from dibcolor.db_repo.unit_of_work import new_uow

from . import Router, arg
from .common import JSON_ARG, emit

router = Router(name="history")


@router.command(
    "history",
    help="сохранённые прогоны проверок и размеры каталогов",
    arguments=[
        arg("--limit", type=int, default=20),
        arg("--property", default=None),
        JSON_ARG,
    ],
)
def cmd_history(args: argparse.Namespace, out: TextIO) -> int:
    with new_uow() as uow:
        runs = [
            {
                "id": r.id,
                "property": r.property,
                "corpus": r.corpus,
                "checked": r.checked,
                "counterexamples": r.counterexamples,
                "witnesses": json.loads(r.witnesses),
                "created_at": r.created_at.isoformat() if r.created_at else None,
            }
            for r in uow.sweep_runs.recent(args.limit, args.property)
        ]
        counts = [
            {"n": n, "r": r, "dib": dib, "count": c}
            for (n, r, dib), c in uow.catalog.counts().items()
        ]
    if args.json:
        emit(out, args, {"kind": "history", "sweep_runs": runs, "catalog": counts})
        return 0
    for run in runs:
        out.write(f"#{run['id']} {run['property']} checked={run['checked']} counterexamples={run['counterexamples']}\n")
    for row in counts:
        out.write(f"catalog n={row['n']} r={row['r']} dib={row['dib']}: {row['count']}\n")
    return 0
