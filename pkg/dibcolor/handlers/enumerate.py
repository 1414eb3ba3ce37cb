# dibcolor/handlers/enumerate.py
from __future__ import annotations

import argparse
from typing import TextIO

from dibcolor.services.codec import encode_d6
from dibcolor.services.enumeration import enumerate_regular

from . import Router, arg
from .common import JSON_ARG, emit

router = Router(name="enumerate")


@router.command(
    "enumerate",
    help="все r-регулярные орграфы порядка n (digraph6 по строке)",
    arguments=[
        arg("--order", type=int, required=True),
        arg("--regularity", type=int, required=True),
        arg("--labeled", action="store_true", help="без отсечения изоморфных копий"),
        JSON_ARG,
    ],
)
def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    found = enumerate_regular(args.order, args.regularity, up_to_iso=not args.labeled)
    lines = [encode_d6(d) for d in found]
    if args.json:
        emit(out, args, {
            "kind": "enumeration",
            "n": args.order,
            "r": args.regularity,
            "up_to_iso": not args.labeled,
            "count": len(lines),
            "digraphs": lines,
        })
    else:
        for line in lines:
            out.write(line + "\n")
    return 0
