import random

import pytest
from hypothesis import given, settings as hsettings

from dibcolor.services.coloring import audit
from dibcolor.services.digraph import build
from dibcolor.services.enumeration import iter_all_digraphs
from dibcolor.services.errors import LimitExceeded, ParameterUndefined, PreconditionFailed
from dibcolor.services.families import (
    circulant,
    complete_symmetric,
    directed_cycle,
    empty,
    random_digraph,
    transitive_tournament,
)
from dibcolor.services.solvers import (
    b_coloring_exists,
    dac_exact,
    dc_exact,
    dib_exact,
    naive_oracle,
    set_partitions,
    solve,
)

from .conftest import digraphs


def _witness_ok(d, outcome):
    a = audit(d, outcome.witness)
    return a.k == outcome.value and a.satisfies(outcome.parameter)


def test_dc_examples(cycle3, transitive5):
    assert dc_exact(transitive5).value == 1
    assert dc_exact(cycle3).value == 2
    assert dc_exact(complete_symmetric(4)).value == 4


def test_dac_examples(cycle3):
    assert dac_exact(complete_symmetric(4)).value == 4
    assert dac_exact(transitive_tournament(4)).value == 2
    assert dac_exact(cycle3).value == 2


def test_dib_examples(cycle3, transitive5, c7_123):
    assert dib_exact(transitive5).value == 3
    assert dib_exact(complete_symmetric(4)).value == 4
    assert dib_exact(cycle3).value == 2
    assert dib_exact(c7_123).value == 4


def test_dib_starts_at_tight_upper_bound():
    # у C₈({1,2}) Δ+1 = t = 3, поиск сразу находит раскраску
    out = dib_exact(circulant(8, (1, 2)))
    assert out.value == 3
    assert out.start_bound == 3
    assert out.exhausted == []


def test_b_coloring_exists_examples(cycle3):
    c = b_coloring_exists(cycle3, 2)
    assert c is not None and c.k == 2
    assert audit(cycle3, c).is_b_coloring
    assert b_coloring_exists(cycle3, 3) is None
    k2 = complete_symmetric(2)
    assert b_coloring_exists(k2, 2).colors in ((0, 1), (1, 0))


def test_b_coloring_exists_range(cycle3):
    with pytest.raises(PreconditionFailed):
        b_coloring_exists(cycle3, 0)
    with pytest.raises(PreconditionFailed):
        b_coloring_exists(cycle3, 4)


@pytest.mark.parametrize("solver", [dc_exact, dac_exact, dib_exact])
def test_solvers_reject_empty(solver):
    with pytest.raises(ParameterUndefined):
        solver(empty(0))


def test_solve_dispatch(cycle3):
    assert solve(cycle3, "dc").value == 2
    with pytest.raises(PreconditionFailed):
        solve(cycle3, "chi")


@pytest.mark.parametrize("n", range(1, 11))
def test_transitive_tournament_dib(n):
    out = dib_exact(transitive_tournament(n))
    assert out.value == (n + 1) // 2
    assert _witness_ok(transitive_tournament(n), out)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_circulant_tournament_dib(m):
    d = circulant(2 * m + 1, tuple(range(1, m + 1)))
    assert dib_exact(d).value == m + 1


@pytest.mark.parametrize(
    "n, k", [(n, k) for n in range(4, 11) for k in range(1, (n - 2) // 2 + 1)]
)
def test_circulant_path_dib(n, k):
    assert dib_exact(circulant(n, tuple(range(1, k + 1)))).value == k + 1


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_dib(n):
    assert dib_exact(complete_symmetric(n)).value == n


def test_set_partitions_counts():
    # числа Белла
    assert [sum(1 for _ in set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_oracle_limit():
    with pytest.raises(LimitExceeded):
        naive_oracle(empty(8))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_solvers_match_oracle_small(n):
    for d in iter_all_digraphs(n):
        o = naive_oracle(d)
        for outcome, expected in ((dc_exact(d), o.dc), (dac_exact(d), o.dac), (dib_exact(d), o.dib)):
            assert outcome.value == expected, (d, outcome.parameter)
            assert _witness_ok(d, outcome)


@pytest.mark.slow
def test_solvers_match_oracle_order_four():
    for d in iter_all_digraphs(4):
        o = naive_oracle(d)
        assert (dc_exact(d).value, dac_exact(d).value, dib_exact(d).value) == (o.dc, o.dac, o.dib), d


@given(digraphs(min_n=1, max_n=6))
@hsettings(max_examples=40, deadline=None)
def test_chain_and_witnesses(d):
    dc, dib, dac = dc_exact(d), dib_exact(d), dac_exact(d)
    assert dc.value <= dib.value <= dac.value
    assert dib.value <= d.delta + 1
    assert all(k > dib.value for k in dib.exhausted)
    assert all(k < dc.value for k in dc.exhausted)
    for out in (dc, dib, dac):
        assert _witness_ok(d, out)


@pytest.mark.slow
def test_chain_on_random_medium_digraphs():
    rng = random.Random(2024)
    for _ in range(500):
        d = random_digraph(rng.randint(5, 9), rng, p=rng.choice([0.2, 0.35, 0.5]))
        assert dc_exact(d).value <= dib_exact(d).value <= dac_exact(d).value


def test_directed_cycles_have_dib_two():
    for n in range(2, 9):
        assert dib_exact(directed_cycle(n)).value == 2
    assert dib_exact(build(4, [(0, 1), (1, 0), (2, 3), (3, 2)])).value == 2
