import pytest

from dibcolor.services.bounds import (
    bounds_report,
    ceil_div,
    cor3_bound,
    cor6_bound,
    dart_bound,
    thm4_bound,
    thm5_lower,
    thm5_upper,
)
from dibcolor.services.digraph import build
from dibcolor.services.errors import ParameterUndefined
from dibcolor.services.families import circulant, complete_symmetric, empty, transitive_tournament


@pytest.mark.parametrize("m, expected", [(0, 1), (1, 1), (2, 2), (6, 3), (11, 3), (12, 4), (21, 5)])
def test_dart_bound(m, expected):
    assert dart_bound(m) == expected


def test_formula_helpers():
    assert ceil_div(7, 2) == 4
    assert thm4_bound(7, 2) == 4
    assert cor6_bound(4, 4) == 2
    assert cor6_bound(5, 3) == 4
    assert cor3_bound(7, 2) == 6
    assert thm5_lower(7, 3) == 3
    assert thm5_upper(7, 3) == 5


def test_report_c7_123(c7_123):
    r = bounds_report(c7_123)
    assert r.delta + 1 == 4
    assert r.t == 4
    assert r.dart_bound == 5
    assert r.beta == 1
    assert r.upper("dib") == 4
    assert {"eq2_delta", "thm1_t"} <= set(r.upper_sources("dib"))
    assert r.chain_consistent


def test_report_complete():
    r = bounds_report(complete_symmetric(4))
    assert r.omega == 4
    assert all(b.value >= 4 for b in r.bounds if b.parameter == "dib" and b.kind == "upper")
    assert r.lower("dc") == 4


def test_report_single_vertex():
    r = bounds_report(empty(1))
    assert (r.omega, r.beta, r.acyclic_number, r.t, r.dart_bound) == (1, 1, 1, 1, 1)
    for p in ("dc", "dib", "dac"):
        assert r.lower(p) == r.upper(p) == 1


def test_report_tournament_condensation():
    r = bounds_report(transitive_tournament(5))
    assert r.strong_components == 5
    assert any(b.source == "condensation_half" and b.value == 3 for b in r.bounds)
    assert r.lower("dib") == 3
    assert r.upper("dib") == 3


def test_report_with_exact_values(k3):
    r = bounds_report(k3, dc=3, dib=3, complement_dib=1)
    assert r.ng_slack == 0
    assert r.lower("dac") == 3
    assert r.chain_consistent


def test_report_flags_inconsistent_claim():
    r = bounds_report(build(2, []), dc=2)
    assert not r.chain_consistent


def test_report_empty_digraph():
    with pytest.raises(ParameterUndefined):
        bounds_report(empty(0))
