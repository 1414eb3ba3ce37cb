# tests/conftest.py
from __future__ import annotations

import pytest
from hypothesis import strategies as st

from dibcolor.config import settings
from dibcolor.services.digraph import Digraph, build
from dibcolor.services.families import circulant, complete_symmetric, directed_cycle, transitive_tournament


@st.composite
def digraphs(draw, min_n: int = 0, max_n: int = 6) -> Digraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build(n, chosen)


@pytest.fixture
def digon() -> Digraph:
    return build(2, [(0, 1), (1, 0)])


@pytest.fixture
def cycle3() -> Digraph:
    return directed_cycle(3)


@pytest.fixture
def k3() -> Digraph:
    return complete_symmetric(3)


@pytest.fixture
def transitive5() -> Digraph:
    return transitive_tournament(5)


@pytest.fixture
def c7_123() -> Digraph:
    return circulant(7, (1, 2, 3))


@pytest.fixture
def db_url(tmp_path, monkeypatch) -> str:
    url = f"sqlite:///{tmp_path / 'catalog.db'}"
    monkeypatch.setattr(settings, "DATABASE_URL", url)
    monkeypatch.setattr(settings, "USE_ALEMBIC", False)
    return url
