# dibcolor/handlers/common.py
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, TextIO

from dibcolor.reports.schemas import JsonReport, digraph_summary, render
from dibcolor.services.codec import decode, decode_d6
from dibcolor.services.digraph import Digraph
from dibcolor.services.errors import InvalidDigraph
from dibcolor.services.families import generate, looks_like_family, parse_family

from . import arg

INPUT_ARGS = [
    arg("source", nargs="?", help="файл, спецификация семейства (circulant:n=7,J=1+2+3), строка digraph6 или '-'"),
    arg("--input", dest="input", help="то же, что позиционный source"),
    arg("--format", choices=("d6", "edges"), default=None, help="формат входа (по умолчанию определяется сам)"),
]
JSON_ARG = arg("--json", action="store_true", help="вывести JSON-отчёт")


def load_digraph(source: Optional[str], fmt: Optional[str] = None, stdin: Optional[TextIO] = None) -> Digraph:
    """Источник: '-' (stdin), спецификация семейства, литерал digraph6 или путь к файлу."""
    if source is None:
        raise InvalidDigraph("no input digraph given", details={})
    if source == "-":
        return decode((stdin or sys.stdin).read(), fmt)
    if looks_like_family(source):
        return generate(parse_family(source))
    path = Path(source)
    if path.is_file():
        return decode(path.read_text(encoding="utf-8"), fmt)
    if source.startswith("&") or source.startswith(">>digraph6<<"):
        return decode_d6(source)
    raise InvalidDigraph(f"cannot resolve input {source!r}", details={"source": source})


def digraph_from_args(args: argparse.Namespace) -> Digraph:
    return load_digraph(args.input or args.source, args.format)


def command_echo(args: argparse.Namespace) -> list[str]:
    return list(getattr(args, "argv", []) or [args.command])


def emit(out: TextIO, args: argparse.Namespace, payload, d: Optional[Digraph] = None) -> None:
    report = JsonReport(
        command=command_echo(args),
        digraph=digraph_summary(d) if d is not None else None,
        payload=payload,
    )
    out.write(render(report) + "\n")
