# dibcolor/handlers/__init__.py
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, TextIO

Handler = Callable[[argparse.Namespace, TextIO], int]


@dataclass
class Command:
    name: str
    help: str
    handler: Handler
    arguments: list[tuple[tuple[str, ...], dict[str, Any]]] = field(default_factory=list)


class Router:
    """Набор подкоманд CLI; app подключает роутеры через include_router."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.commands: dict[str, Command] = {}

    def command(self, name: str, *, help: str, arguments: list[tuple[tuple[str, ...], dict[str, Any]]] = ()) -> Callable[[Handler], Handler]:
        def deco(fn: Handler) -> Handler:
            self.commands[name] = Command(name, help, fn, list(arguments))
            return fn
        return deco


def arg(*flags: str, **kwargs: Any) -> tuple[tuple[str, ...], dict[str, Any]]:
    return flags, kwargs
