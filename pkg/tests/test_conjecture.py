import pytest

from dibcolor.services.codec import encode_d6
from dibcolor.services.conjecture import conjecture_scan, regular_catalog
from dibcolor.services.digraph import is_regular
from dibcolor.services.errors import LimitExceeded
from dibcolor.services.families import complete_symmetric
from dibcolor.services.solvers import dib_exact


def test_order_three_catalog_is_k3():
    cat = regular_catalog(3, 2)
    assert cat.by_dib == {3: [encode_d6(complete_symmetric(3))]}
    assert cat.counts == {3: 1}
    assert cat.members(2) == []


def test_one_regular_catalogs_have_dib_two():
    for n in range(3, 7):
        cat = regular_catalog(n, 1)
        assert set(cat.by_dib) == {2}


def test_scan_classes_only_two_or_three():
    catalogs = conjecture_scan(5)
    assert [(c.n, c.r) for c in catalogs] == [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]
    for cat in catalogs:
        allowed = {2} if cat.r == 1 else {2, 3}
        assert set(cat.by_dib) <= allowed
        for d in (m for dib in cat.by_dib for m in cat.members(dib)):
            assert is_regular(d, cat.r)


def test_catalog_classes_match_solver():
    cat = regular_catalog(5, 2)
    for dib in cat.by_dib:
        for d in cat.members(dib):
            assert dib_exact(d).value == dib


def test_scan_is_stable_and_thread_independent():
    a = conjecture_scan(5, include_one_regular=False, threads=1)
    b = conjecture_scan(5, include_one_regular=False, threads=2)
    assert [c.by_dib for c in a] == [c.by_dib for c in b]


@pytest.mark.slow
def test_scan_up_to_six():
    catalogs = conjecture_scan(6, include_one_regular=False)
    assert all(set(c.by_dib) <= {2, 3} for c in catalogs)
    assert catalogs[-1].total > 0


def test_scan_limit(monkeypatch):
    from dibcolor.config import settings

    monkeypatch.setattr(settings, "ENUM_MAX_N", 5)
    with pytest.raises(LimitExceeded):
        conjecture_scan(6)
