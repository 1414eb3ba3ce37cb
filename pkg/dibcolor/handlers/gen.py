# dibcolor/handlers/gen.py
from __future__ import annotations

import argparse
import dataclasses
from typing import TextIO

from dibcolor.services.codec import encode
from dibcolor.services.families import generate, parse_family

from . import Router, arg

router = Router(name="gen")


@router.command(
    "gen",
    help="построить орграф семейства и вывести его в digraph6 или списком дуг",
    arguments=[
        arg("family", help="например circulant:n=5,J=1+2"),
        arg("--format", choices=("d6", "edges"), default="d6"),
        arg("--seed", type=int, default=None, help="переопределить seed случайного семейства"),
    ],
)
def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    spec = parse_family(args.family)
    if args.seed is not None:
        spec = dataclasses.replace(spec, seed=args.seed)
    out.write(encode(generate(spec), args.format))
    return 0
