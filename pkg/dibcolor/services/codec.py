# dibcolor/services/codec.py
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Literal, Union

from pydantic import TypeAdapter, ValidationError

from .coloring import Coloring
from .digraph import Digraph, build
from .errors import InvalidColoring, ParseError

TextFormat = Literal["d6", "edges"]

HEADER = ">>digraph6<<"
_BIAS = 63
_SMALL_MAX = 62
_MEDIUM_MAX = 258047
_LARGE_MAX = 68719476735

_colors_adapter = TypeAdapter(list[int])


# ---------- digraph6 ----------

def _encode_size(n: int) -> str:
    if n <= _SMALL_MAX:
        return chr(n + _BIAS)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr((n >> s & 0x3F) + _BIAS) for s in (12, 6, 0))
    if n <= _LARGE_MAX:
        return "~~" + "".join(chr((n >> s & 0x3F) + _BIAS) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} is too large for digraph6")


def _decode_size(body: str, line: int, base: int) -> tuple[int, int]:
    """Вернуть (n, позиция после заголовка размера)."""

    def group(pos: int, count: int) -> int:
        chunk = body[pos:pos + count]
        if len(chunk) < count:
            raise ParseError("truncated size header", line=line, offset=base + pos)
        value = 0
        for i, ch in enumerate(chunk):
            code = ord(ch) - _BIAS
            if not 0 <= code < 64:
                raise ParseError(f"bad size character {ch!r}", line=line, offset=base + pos + i)
            value = value << 6 | code
        return value

    if not body:
        raise ParseError("missing size header", line=line, offset=base)
    if body.startswith("~~"):
        return group(2, 6), 8
    if body.startswith("~"):
        return group(1, 3), 4
    return group(0, 1), 1


def encode_d6(d: Digraph, *, header: bool = False) -> str:
    """
    digraph6: `&`, размер, затем n² битов матрицы смежности построчно
    (диагональ включительно), дополненные нулями до кратного 6.
    """
    n = d.n
    out = [HEADER if header else "", "&", _encode_size(n)]
    acc, nbits = 0, 0
    for u in range(n):
        row = d.out_rows[u]
        for v in range(n):
            acc = acc << 1 | (row >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + _BIAS))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + _BIAS))
    return "".join(out)


def decode_d6(text: str, *, line: int = 1) -> Digraph:
    raw = text.strip()
    base = 0
    if raw.startswith(HEADER):
        raw = raw[len(HEADER):]
        base = len(HEADER)
    if not raw.startswith("&"):
        raise ParseError("digraph6 line must start with '&'", line=line, offset=base)
    n, pos = _decode_size(raw[1:], line, base + 1)
    pos += 1
    need = -(-n * n // 6)
    body = raw[pos:]
    if len(body) != need:
        raise ParseError(
            f"expected {need} adjacency characters for n={n}, got {len(body)}",
            line=line, offset=base + pos, details={"n": n},
        )
    darts = []
    bit = 0
    for i, ch in enumerate(body):
        code = ord(ch) - _BIAS
        if not 0 <= code < 64:
            raise ParseError(f"bad adjacency character {ch!r}", line=line, offset=base + pos + i)
        for s in range(5, -1, -1):
            if bit >= n * n:
                if code >> s & 1:
                    raise ParseError("nonzero padding bit", line=line, offset=base + pos + i)
            elif code >> s & 1:
                u, v = divmod(bit, n)
                if u == v:
                    raise ParseError(f"loop at vertex {u}", line=line, offset=base + pos + i)
                darts.append((u, v))
            bit += 1
    return build(n, darts)


def iter_d6(lines: Iterable[str]) -> Iterator[Digraph]:
    for no, ln in enumerate(lines, start=1):
        if ln.strip():
            yield decode_d6(ln, line=no)


# ---------- список дуг ----------

def _ints(text: str, count: int, line: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {len(parts)}", line=line)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {text.strip()!r}", line=line) from None


def decode_edges(text: str) -> Digraph:
    """Первая строка `n m`, затем m строк `u v`; пустые строки и `#`-комментарии пропускаются."""
    rows = [
        (no, ln.split("#", 1)[0].strip())
        for no, ln in enumerate(text.splitlines(), start=1)
    ]
    rows = [(no, ln) for no, ln in rows if ln]
    if not rows:
        raise ParseError("empty edge list", line=1)
    head_no, head = rows[0]
    n, m = _ints(head, 2, head_no)
    if n < 0 or m < 0:
        raise ParseError("n and m must be >= 0", line=head_no)
    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else (body[-1][0] if body else head_no)
        raise ParseError(f"header declares {m} darts, found {len(body)}", line=line, details={"m": m})
    darts: set[tuple[int, int]] = set()
    for no, ln in body:
        u, v = _ints(ln, 2, no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"dart ({u},{v}) out of range for n={n}", line=no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", line=no)
        if (u, v) in darts:
            raise ParseError(f"duplicate dart ({u},{v})", line=no)
        darts.add((u, v))
    return build(n, darts)


def encode_edges(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{u} {v}" for u, v in d.sorted_darts())
    return "\n".join(lines) + "\n"


# ---------- определение формата и файлы ----------

def detect_format(text: str) -> TextFormat:
    head = text.lstrip()
    return "d6" if head.startswith(HEADER) or head.startswith("&") else "edges"


def decode(text: str, fmt: TextFormat | None = None) -> Digraph:
    fmt = fmt or detect_format(text)
    if fmt == "d6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one digraph6 line, got {len(lines)}", line=min(len(lines), 2) or 1)
        return decode_d6(lines[0])
    return decode_edges(text)


def encode(d: Digraph, fmt: TextFormat = "d6") -> str:
    return encode_d6(d) + "\n" if fmt == "d6" else encode_edges(d)


def read_digraph(path: Union[str, Path], fmt: TextFormat | None = None) -> Digraph:
    return decode(Path(path).read_text(encoding="utf-8"), fmt)


# ---------- раскраска ----------

def decode_coloring(text: str) -> Coloring:
    """JSON-массив цветов по индексам вершин."""
    try:
        colors = _colors_adapter.validate_json(text)
    except ValidationError as e:
        err = e.errors()[0]
        raise ParseError(f"coloring must be a JSON array of integers: {err['msg']}", line=1) from None
    if any(c < 0 for c in colors):
        raise InvalidColoring("colors must be non-negative", details={"colors": colors})
    return Coloring(tuple(colors))


def encode_coloring(c: Coloring) -> str:
    return _colors_adapter.dump_json(c.as_list()).decode()


def read_coloring(path: Union[str, Path]) -> Coloring:
    return decode_coloring(Path(path).read_text(encoding="utf-8"))
