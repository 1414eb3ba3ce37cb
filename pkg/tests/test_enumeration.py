import random
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings as hsettings

from dibcolor.services.digraph import build, converse, is_regular, relabel, to_networkx
from dibcolor.services.enumeration import (
    canonical_digraph,
    canonical_form,
    enumerate_labeled,
    enumerate_regular,
    is_canonical,
    iter_all_digraphs,
    iter_tournaments,
    regular_shards,
)
from dibcolor.services.errors import LimitExceeded
from dibcolor.services.families import complete_symmetric, directed_cycle, empty, transitive_tournament

from .conftest import digraphs


def test_canonical_form_isomorphic_pair(cycle3):
    assert canonical_form(cycle3) == canonical_form(converse(cycle3))


def test_canonical_form_distinguishes(cycle3):
    assert canonical_form(cycle3) != canonical_form(transitive_tournament(3))


def test_canonical_form_random_relabelings():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 6)
        d = build(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(relabel(d, perm)) == canonical_form(d)


@given(digraphs(max_n=5))
@hsettings(max_examples=60)
def test_canonical_digraph_is_fixed_point(d):
    c = canonical_digraph(d)
    assert canonical_digraph(c) == c
    assert is_canonical(c)


def test_canonical_form_limit():
    with pytest.raises(LimitExceeded):
        canonical_form(empty(9))


def test_canonical_form_empty_digraph():
    assert canonical_form(empty(0)) == b"&?"


@pytest.mark.parametrize(
    "n, r, expected",
    [(2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 1, 2), (5, 1, 2), (6, 1, 4)],
)
def test_enumerate_regular_up_to_iso(n, r, expected):
    found = enumerate_regular(n, r, up_to_iso=True)
    assert len(found) == expected
    assert all(is_regular(d, r) for d in found)
    assert len({canonical_form(d) for d in found}) == expected


def test_enumerate_regular_examples():
    assert enumerate_regular(2, 1) == [complete_symmetric(2)]
    assert canonical_form(enumerate_regular(3, 1)[0]) == canonical_form(directed_cycle(3))
    assert enumerate_regular(3, 2) == [complete_symmetric(3)]
    assert enumerate_regular(3, 3) == []


@pytest.mark.parametrize("n, count", [(3, 2), (4, 9), (5, 44)])
def test_labeled_one_regular_are_derangements(n, count):
    assert len(enumerate_regular(n, 1, up_to_iso=False)) == count


def test_enumerate_regular_limit(monkeypatch):
    from dibcolor.config import settings

    monkeypatch.setattr(settings, "ENUM_MAX_N", 5)
    with pytest.raises(LimitExceeded):
        enumerate_regular(6, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_profiles_cover_all_labeled_digraphs(n):
    total = 0
    for outdeg in product(range(n), repeat=n):
        for indeg in product(range(n), repeat=n):
            total += sum(1 for _ in enumerate_labeled(n, outdeg, indeg))
    assert total == 2 ** (n * n - n)


def test_shards_partition_the_labeled_set():
    shards = regular_shards(5, 2)
    assert len(shards) == 6
    total = sum(sum(1 for _ in enumerate_labeled(5, [2] * 5, [2] * 5, first_row=s)) for s in shards)
    assert total == sum(1 for _ in enumerate_labeled(5, [2] * 5, [2] * 5))


def test_iterators_counts():
    assert sum(1 for _ in iter_all_digraphs(3)) == 64
    assert sum(1 for _ in iter_tournaments(4)) == 64
    assert list(iter_all_digraphs(0)) == [empty(0)]


def test_enumeration_is_deterministic():
    assert enumerate_regular(5, 2) == enumerate_regular(5, 2)


def test_canonical_form_agrees_with_networkx_isomorphism():
    rng = random.Random(5)
    pool = [
        build(4, [(u, v) for u in range(4) for v in range(4) if u != v and rng.random() < 0.35])
        for _ in range(60)
    ]
    for a, b in zip(pool, pool[1:]):
        same = nx.is_isomorphic(to_networkx(a), to_networkx(b))
        assert (canonical_form(a) == canonical_form(b)) == same
