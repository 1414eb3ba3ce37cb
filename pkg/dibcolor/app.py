# dibcolor/app.py
from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import redirect_stderr
from typing import Optional, Sequence, TextIO

from dibcolor.config import settings
from dibcolor.handlers import Router
from dibcolor.handlers.bounds import router as bounds_router
from dibcolor.handlers.check import router as check_router
from dibcolor.handlers.conjecture import router as conjecture_router
from dibcolor.handlers.construct import router as construct_router
from dibcolor.handlers.enumerate import router as enumerate_router
from dibcolor.handlers.gen import router as gen_router
from dibcolor.handlers.history import router as history_router
from dibcolor.handlers.solve import router as solve_router
from dibcolor.handlers.sweep import router as sweep_router
from dibcolor.services.errors import DomainError

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def setup_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger("sqlalchemy.engine").setLevel(logging.WARNING)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser(routers: Sequence[Router]) -> argparse.ArgumentParser:
    parser = _Parser(prog="dibcolor", description="dib-хроматическое число орграфов: решатели, оценки, построения")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for router in routers:
        for cmd in router.commands.values():
            p = sub.add_parser(cmd.name, help=cmd.help)
            for flags, kwargs in cmd.arguments:
                p.add_argument(*flags, **kwargs)
            p.set_defaults(handler=cmd.handler)
    return parser


ROUTERS = [
    solve_router,
    check_router,
    bounds_router,
    gen_router,
    construct_router,
    enumerate_router,
    sweep_router,
    conjecture_router,
    history_router,
]


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser(ROUTERS)
    try:
        # usage-ошибки argparse пишет в sys.stderr
        with redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.argv = argv
    setup_logging(args.log_level)

    try:
        return args.handler(args, out)
    except DomainError as e:
        logger.info("[CLI ERROR] command=%s code=%s", args.command, e.code)
        err.write(json.dumps({**e.as_dict(), "command": args.command}, ensure_ascii=False) + "\n")
        return EXIT_DOMAIN
    except OSError as e:
        err.write(json.dumps({"error": "io_error", "message": str(e), "details": {}, "command": args.command}) + "\n")
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
