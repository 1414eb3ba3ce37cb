# dibcolor/services/families.py
from __future__ import annotations

import enum
import logging
import random
from dataclasses import dataclass
from typing import Optional

from dibcolor.config import settings

from .digraph import Digraph, build
from .errors import GenerationFailed, InvalidFamilySpec

logger = logging.getLogger(__name__)


class Family(enum.Enum):
    TRANSITIVE_TOURNAMENT = "transitive_tournament"
    COMPLETE_SYMMETRIC = "complete_symmetric"
    DIRECTED_CYCLE = "directed_cycle"
    CIRCULANT = "circulant"
    EMPTY = "empty"
    RANDOM_TOURNAMENT = "random_tournament"
    RANDOM_REGULAR = "random_regular"

    def tag(self) -> str:
        return _FAMILY_TO_TAG[self]

    @classmethod
    def from_any(cls, x: "str | Family") -> "Family":
        if isinstance(x, cls):
            return x
        key = str(x).strip().lower()
        if key in _TAG_TO_FAMILY:
            return _TAG_TO_FAMILY[key]
        for m in cls:
            if m.value == key.replace("-", "_"):
                return m
        raise InvalidFamilySpec(f"unknown family {x!r}", details={"family": str(x)})


_FAMILY_TO_TAG = {
    Family.TRANSITIVE_TOURNAMENT: "transitive",
    Family.COMPLETE_SYMMETRIC: "complete",
    Family.DIRECTED_CYCLE: "cycle",
    Family.CIRCULANT: "circulant",
    Family.EMPTY: "empty",
    Family.RANDOM_TOURNAMENT: "random-tournament",
    Family.RANDOM_REGULAR: "random-regular",
}
_TAG_TO_FAMILY = {v: k for k, v in _FAMILY_TO_TAG.items()}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    jumps: tuple[int, ...] = ()
    r: Optional[int] = None
    seed: Optional[int] = None
    allow_digons: bool = False

    def __post_init__(self) -> None:
        validate(self)

    @property
    def text(self) -> str:
        """Каноническая текстовая форма, например `circulant:n=7,J=1+2+3`."""
        parts = [f"n={self.n}"]
        if self.family is Family.CIRCULANT:
            parts.append("J=" + "+".join(str(j) for j in self.jumps))
        if self.family is Family.RANDOM_REGULAR:
            parts.append(f"r={self.r}")
        if self.seed is not None and self.family in (Family.RANDOM_REGULAR, Family.RANDOM_TOURNAMENT):
            parts.append(f"seed={self.seed}")
        if self.allow_digons:
            parts.append("digons=1")
        return f"{self.family.tag()}:{','.join(parts)}"

    def __str__(self) -> str:
        return self.text


def normalize_jumps(n: int, raw: tuple[int, ...]) -> tuple[int, ...]:
    """Привести прыжки по модулю n и проверить |{-j, j} ∩ J| = 1."""
    if n < 1:
        raise InvalidFamilySpec("circulant needs n >= 1", details={"n": n})
    jumps: list[int] = []
    for j in raw:
        jm = j % n
        if jm == 0:
            raise InvalidFamilySpec(f"jump {j} is 0 modulo {n}", details={"jump": j, "n": n})
        if jm in jumps:
            continue
        if (n - jm) % n in jumps and (n - jm) % n != jm:
            raise InvalidFamilySpec(
                f"jump set contains both {j} and its negative modulo {n}",
                details={"jump": j, "n": n},
            )
        jumps.append(jm)
    if not jumps:
        raise InvalidFamilySpec("circulant jump set must be nonempty", details={"n": n})
    return tuple(sorted(jumps))


def validate(spec: FamilySpec) -> None:
    if spec.n < 0:
        raise InvalidFamilySpec(f"n must be >= 0, got {spec.n}", details={"n": spec.n})
    if spec.family is Family.DIRECTED_CYCLE and spec.n < 2:
        raise InvalidFamilySpec("directed cycle needs n >= 2", details={"n": spec.n})
    if spec.family is Family.CIRCULANT:
        object.__setattr__(spec, "jumps", normalize_jumps(spec.n, spec.jumps))
    if spec.family is Family.RANDOM_REGULAR:
        if spec.r is None or not 0 <= spec.r < spec.n:
            raise InvalidFamilySpec(
                f"random-regular needs 0 <= r < n, got r={spec.r} n={spec.n}",
                details={"r": spec.r, "n": spec.n},
            )


def parse_family(text: str) -> FamilySpec:
    """Разобрать `tag:key=value,...`; прыжки разделяются знаком `+`."""
    raw = text.strip()
    tag, _, params = raw.partition(":")
    family = Family.from_any(tag)
    fields: dict[str, str] = {}
    if params:
        for chunk in params.split(","):
            key, sep, value = chunk.partition("=")
            if not sep or not key.strip():
                raise InvalidFamilySpec(f"malformed parameter {chunk!r} in {raw!r}", details={"spec": raw})
            fields[key.strip()] = value.strip()
    unknown = set(fields) - {"n", "J", "r", "seed", "digons"}
    if unknown:
        raise InvalidFamilySpec(f"unknown parameters {sorted(unknown)} in {raw!r}", details={"spec": raw})
    if "n" not in fields:
        raise InvalidFamilySpec(f"family spec {raw!r} lacks n", details={"spec": raw})
    try:
        n = int(fields["n"])
        jumps = tuple(int(x) for x in fields["J"].split("+") if x) if "J" in fields else ()
        r = int(fields["r"]) if "r" in fields else None
        seed = int(fields["seed"]) if "seed" in fields else None
        digons = fields.get("digons", "0").lower() in ("1", "true", "yes")
    except ValueError as e:
        raise InvalidFamilySpec(f"non-integer value in {raw!r}: {e}", details={"spec": raw}) from None
    if family is Family.CIRCULANT and not jumps:
        raise InvalidFamilySpec("circulant needs J", details={"spec": raw})
    return FamilySpec(family=family, n=n, jumps=jumps, r=r, seed=seed, allow_digons=digons)


def looks_like_family(text: str) -> bool:
    tag, sep, _ = text.strip().partition(":")
    return bool(sep) and (tag.lower() in _TAG_TO_FAMILY or tag.lower().replace("-", "_") in {f.value for f in Family})


# ---------- генераторы ----------

def transitive_tournament(n: int) -> Digraph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_symmetric(n: int) -> Digraph:
    return build(n, [(i, j) for i in range(n) for j in range(n) if i != j])


def directed_cycle(n: int) -> Digraph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def circulant(n: int, jumps: tuple[int, ...]) -> Digraph:
    js = normalize_jumps(n, jumps)
    return build(n, [(i, (i + j) % n) for i in range(n) for j in js])


def empty(n: int) -> Digraph:
    return build(n, [])


def random_tournament(n: int, seed: Optional[int] = None) -> Digraph:
    rng = random.Random(seed)
    darts = []
    for i in range(n):
        for j in range(i + 1, n):
            darts.append((i, j) if rng.random() < 0.5 else (j, i))
    return build(n, darts)


def random_digraph(n: int, rng: random.Random, p: float = 0.5) -> Digraph:
    return build(n, [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p])


def random_regular(
    n: int,
    r: int,
    seed: Optional[int] = None,
    *,
    allow_digons: bool = False,
    retries: Optional[int] = None,
) -> Digraph:
    """
    Наложение r случайных перестановок без неподвижных точек, повторных дуг
    и (по умолчанию) дигонов. При конфликте перетасовывается только текущий слой;
    бюджет попыток на слой ограничен.
    """
    if not 0 <= r < n:
        raise InvalidFamilySpec(f"random-regular needs 0 <= r < n, got r={r} n={n}", details={"r": r, "n": n})
    budget = retries if retries is not None else settings.REGULAR_RETRIES
    rng = random.Random(seed)
    rows = [0] * n
    shuffles = 0
    for layer in range(r):
        perm = list(range(n))
        for _ in range(budget):
            rng.shuffle(perm)
            shuffles += 1
            if all(
                i != j
                and not rows[i] >> j & 1
                and (allow_digons or not (rows[j] >> i & 1 or perm[j] == i))
                for i, j in enumerate(perm)
            ):
                break
        else:
            raise GenerationFailed(
                f"random-regular n={n} r={r} failed on layer {layer} after {budget} attempts",
                details={"n": n, "r": r, "seed": seed, "layer": layer, "retries": budget},
            )
        for i, j in enumerate(perm):
            rows[i] |= 1 << j
    logger.debug("[GEN] random-regular n=%d r=%d seed=%s shuffles=%d", n, r, seed, shuffles)
    return build(n, [(i, j) for i in range(n) for j in range(n) if rows[i] >> j & 1])


def generate(spec: FamilySpec) -> Digraph:
    f = spec.family
    if f is Family.TRANSITIVE_TOURNAMENT:
        return transitive_tournament(spec.n)
    if f is Family.COMPLETE_SYMMETRIC:
        return complete_symmetric(spec.n)
    if f is Family.DIRECTED_CYCLE:
        return directed_cycle(spec.n)
    if f is Family.CIRCULANT:
        return circulant(spec.n, spec.jumps)
    if f is Family.EMPTY:
        return empty(spec.n)
    if f is Family.RANDOM_TOURNAMENT:
        return random_tournament(spec.n, spec.seed)
    return random_regular(spec.n, spec.r or 0, spec.seed, allow_digons=spec.allow_digons)
