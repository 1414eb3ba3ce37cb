import pytest

from dibcolor.services.digraph import is_regular, is_tournament
from dibcolor.services.errors import GenerationFailed, InvalidFamilySpec
from dibcolor.services.families import (
    Family,
    FamilySpec,
    circulant,
    generate,
    looks_like_family,
    normalize_jumps,
    parse_family,
    random_regular,
    random_tournament,
)


def test_circulant_tournament_is_regular():
    d = generate(parse_family("circulant:n=5,J=1+2"))
    assert is_tournament(d)
    assert is_regular(d, 2)


def test_transitive_darts():
    d = generate(FamilySpec(Family.TRANSITIVE_TOURNAMENT, 3))
    assert d.darts == frozenset({(0, 1), (0, 2), (1, 2)})


@pytest.mark.parametrize("jumps, bad", [((1, -1), -1), ((1, 5), 5), ((2, 6), 6)])
def test_jump_set_rejects_both_signs(jumps, bad):
    with pytest.raises(InvalidFamilySpec) as e:
        normalize_jumps(6, jumps)
    assert e.value.details["jump"] == bad


def test_jump_zero_rejected():
    with pytest.raises(InvalidFamilySpec):
        circulant(5, (5,))


def test_half_jump_allowed_for_even_n():
    d = circulant(6, (3,))
    assert d.is_symmetric_dart(0, 3)


@pytest.mark.parametrize(
    "text",
    [
        "circulant:n=7,J=1+2+3",
        "transitive:n=6",
        "complete:n=4",
        "cycle:n=5",
        "empty:n=0",
        "random-tournament:n=5,seed=3",
        "random-regular:n=12,r=2,seed=7",
    ],
)
def test_text_form_is_canonical(text):
    assert parse_family(text).text == text


@pytest.mark.parametrize(
    "text",
    ["circulant:n=7", "cycle:n=1", "unknown:n=3", "transitive:k=3", "transitive:n=x", "random-regular:n=3,r=3", "transitive"],
)
def test_bad_specs(text):
    with pytest.raises(InvalidFamilySpec):
        parse_family(text)


def test_looks_like_family():
    assert looks_like_family("circulant:n=7,J=1+2")
    assert looks_like_family("random_regular:n=8,r=1")
    assert not looks_like_family("graphs/c7.d6")
    assert not looks_like_family("&AW")


def test_random_regular_deterministic_and_regular():
    a = random_regular(12, 2, seed=7)
    b = random_regular(12, 2, seed=7)
    assert a == b
    assert is_regular(a, 2)
    assert not any(a.is_symmetric_dart(u, v) for u, v in a.darts)


def test_random_regular_with_digons_allowed():
    d = random_regular(6, 3, seed=1, allow_digons=True)
    assert is_regular(d, 3)


def test_random_regular_gives_up():
    # 2-регулярный орграф на 4 вершинах без дигонов не существует
    with pytest.raises(GenerationFailed):
        random_regular(4, 2, seed=0, retries=25)


def test_random_tournament_seeded():
    assert random_tournament(6, seed=4) == random_tournament(6, seed=4)
    assert is_tournament(random_tournament(6, seed=4))


def test_seeded_random_regular_family():
    d = generate(parse_family("random-regular:n=12,r=2,seed=7"))
    assert is_regular(d, 2)
    assert d == generate(parse_family("random-regular:n=12,r=2,seed=7"))


def test_random_regular_succeeds_across_seeds():
    for seed in range(200):
        d = random_regular(12, 2, seed=seed)
        assert is_regular(d, 2)
        assert not any(d.is_symmetric_dart(u, v) for u, v in d.darts)
