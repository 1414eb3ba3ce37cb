# dibcolor/services/errors.py
from __future__ import annotations

from typing import Any, Optional


class DomainError(ValueError):
    """
    Базовая ошибка предметной области.
    code — стабильный идентификатор (его видит CLI в JSON ошибки),
    details — JSON-совместимые подробности.
    """

    code = "domain_error"

    def __init__(self, message: str, *, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details: dict[str, Any] = dict(details or {})

    def as_dict(self) -> dict[str, Any]:
        return {"error": self.code, "message": self.message, "details": self.details}


class InvalidDigraph(DomainError):
    code = "invalid_digraph"


class InvalidColoring(DomainError):
    code = "invalid_coloring"


class InvalidFamilySpec(DomainError):
    code = "invalid_family_spec"


class PreconditionFailed(DomainError):
    code = "precondition_failed"


class ParameterUndefined(DomainError):
    code = "parameter_undefined"


class UnknownProperty(DomainError):
    code = "unknown_property"


class GenerationFailed(DomainError):
    code = "generation_failed"


class LimitExceeded(DomainError):
    code = "limit_exceeded"


class ParseError(DomainError):
    code = "parse_error"

    def __init__(self, message: str, *, line: int, offset: int = 0, details: Optional[dict[str, Any]] = None) -> None:
        merged = {"line": line, "offset": offset}
        merged.update(details or {})
        super().__init__(message, details=merged)
        self.line = line
        self.offset = offset
