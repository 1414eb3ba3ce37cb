import random

import pytest
from hypothesis import given, settings as hsettings

from dibcolor.services.codec import (
    decode,
    decode_coloring,
    decode_d6,
    decode_edges,
    detect_format,
    encode,
    encode_coloring,
    encode_d6,
    encode_edges,
    iter_d6,
    read_coloring,
    read_digraph,
)
from dibcolor.services.coloring import Coloring
from dibcolor.services.digraph import build
from dibcolor.services.errors import InvalidColoring, ParseError
from dibcolor.services.families import circulant, empty, random_digraph, transitive_tournament

from .conftest import digraphs


def test_digon_encodes_as_known_string(digon):
    assert encode_d6(digon) == "&AW"
    assert decode_d6("&AW") == digon


def test_header_and_empty():
    assert encode_d6(empty(0)) == "&?"
    assert decode_d6(">>digraph6<<&AW").m == 2
    assert encode_d6(build(2, [(0, 1)]), header=True) == ">>digraph6<<&AO"


def test_transitive_three():
    # биты 011 001 000 -> 'B' (3), затем 011001 = 25 -> 'X', 000 -> '?'
    assert encode_d6(transitive_tournament(3)) == "&BX?"


def test_large_size_header_round_trip():
    d = build(70, [(0, 69), (69, 1), (35, 36)])
    text = encode_d6(d)
    assert text.startswith("&~")
    assert decode_d6(text) == d


@pytest.mark.parametrize(
    "text, offset",
    [
        ("AW", 0),
        ("&", 1),
        ("&AWW", 2),
        ("&A\x7f", 2),
    ],
)
def test_d6_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as e:
        decode_d6(text, line=3)
    assert e.value.line == 3
    assert e.value.offset == offset


def test_d6_rejects_loops_and_padding():
    with pytest.raises(ParseError):
        decode_d6("&A" + chr(0b100000 + 63))
    with pytest.raises(ParseError):
        decode_d6("&A" + chr(0b011001 + 63))


def test_round_trip_random_up_to_forty():
    rng = random.Random(5)
    for _ in range(1000):
        d = random_digraph(rng.randint(0, 40), rng, p=rng.random())
        assert decode_d6(encode_d6(d)) == d


@given(digraphs(max_n=8))
@hsettings(max_examples=50)
def test_edges_and_d6_agree(d):
    assert decode(encode_edges(d)) == decode(encode(d, "d6")) == d


def test_edge_list_parse():
    d = decode_edges("# пример\n3 2\n0 1\n1 2  # хвост\n")
    assert d.darts == frozenset({(0, 1), (1, 2)})


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("3\n", 1),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n0 x\n", 2),
    ],
)
def test_edge_list_errors(text, line):
    with pytest.raises(ParseError) as e:
        decode_edges(text)
    assert e.value.line == line


def test_detect_format():
    assert detect_format("&AW\n") == "d6"
    assert detect_format(">>digraph6<<&AW") == "d6"
    assert detect_format("2 1\n0 1\n") == "edges"


def test_multi_line_d6_rejected():
    with pytest.raises(ParseError):
        decode("&AW\n&AW\n")


def test_iter_d6_reports_line_numbers():
    with pytest.raises(ParseError) as e:
        list(iter_d6(["&AW", "", "&A"]))
    assert e.value.line == 3


def test_files(tmp_path):
    d = circulant(7, (1, 2))
    (tmp_path / "c7.d6").write_text(encode(d))
    (tmp_path / "c7.edges").write_text(encode_edges(d))
    assert read_digraph(tmp_path / "c7.d6") == read_digraph(tmp_path / "c7.edges") == d
    (tmp_path / "col.json").write_text("[0, 1, 2, 0, 1, 2, 0]")
    assert read_coloring(tmp_path / "col.json").k == 3


def test_coloring_json():
    assert encode_coloring(Coloring((0, 1, 1))) == "[0,1,1]"
    assert decode_coloring("[0, 1, 1]").colors == (0, 1, 1)
    with pytest.raises(ParseError):
        decode_coloring('{"a": 1}')
    with pytest.raises(InvalidColoring):
        decode_coloring("[0, 2]")
