import json

import pytest
from hypothesis import given, settings

from judicious.core import Bipartition, SpecialMultigraph, Tripartition
from judicious.generators import grid3, random_special_multigraph, tight15
from judicious.io import (
    ParseError,
    dumps,
    format_hypergraph,
    format_special_multigraph,
    parse_hypergraph,
    parse_instance,
    parse_parts,
    parse_special_multigraph,
    partition_dict,
    parts_of,
)
from judicious.pipeline import verify_good

from .strategies import hypergraphs, special_multigraphs


@settings(max_examples=100, deadline=None)
@given(hypergraphs(min_n=0, max_n=8))
def test_hypergraph_round_trip(G):
    assert parse_hypergraph(format_hypergraph(G)) == G


@settings(max_examples=100, deadline=None)
@given(special_multigraphs())
def test_special_round_trip(M):
    back = parse_special_multigraph(format_special_multigraph(M))
    assert back == M


def test_header_and_comments():
    text = format_hypergraph(tight15(), comment="tight")
    assert text.splitlines()[:2] == ["# tight", "p h3 7 5"]
    assert format_hypergraph(grid3()).startswith("p h3 9 6\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("p h3 3\n", 1),
        ("p h2 3 1\n1 2 3\n", 1),
        ("p h3 3 1\n1 2 4\n", 2),
        ("p h3 3 1\n1 1 2\n", 2),
        ("p h3 3 2\n1 2 3\n3 2 1\n", 3),
        ("# c\np h3 3 1\n1 2 x\n", 3),
        ("p h3 3 1\n1 2\n", 2),
        ("p h3 3 2\n1 2 3\n", 0),
        ("", 0),
    ],
)
def test_hypergraph_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(text)
    assert info.value.line == line
    if line:
        assert str(info.value).startswith(f"line {line}:")


@pytest.mark.parametrize(
    "text",
    [
        "p smg 3 1 0\ne 1 1 1\n",
        "p smg 3 1 0\ne 1 2 0\n",
        "p smg 3 1 1\ne 1 2 1\n",
        "p smg 3 2 0\ne 1 2 1\n",
        "p smg 3 0 2\ns 1\ns 1\n",
        "p smg 3 0 0\nx 1\n",
        "p smg 3 0\n",
    ],
)
def test_special_errors(text):
    with pytest.raises(ParseError):
        parse_special_multigraph(text)


def test_parse_instance_dispatch():
    M = random_special_multigraph(5, 4, 1, 2, 0)
    assert isinstance(parse_instance(format_special_multigraph(M)), SpecialMultigraph)
    assert parse_instance("# x\n" + format_hypergraph(tight15())) == tight15()
    with pytest.raises(ParseError):
        parse_instance("# nothing\n")


def test_partition_json(g_tight):
    P = Tripartition((0, 1, 2, 0, 1, 2, 2))
    data = partition_dict(P, verify_good(g_tight, P, "exact"))
    assert data["parts"] == [[1, 4], [2, 5], [3, 6, 7]]
    assert data["degrees"] == [3, 3, 5] and data["meets_bound"]
    assert data["threshold"] == {"num": 3, "den": 5}
    assert set(data["flags"]) == {"semi_optimal", "locally_optimal", "exact"}
    text = dumps(data)
    assert text.endswith("}\n") and json.loads(text) == data
    assert parse_parts(text, 7, 3) == [[0, 3], [1, 4], [2, 5, 6]]


@pytest.mark.parametrize(
    "parts",
    [[[1, 2], [2, 3], []], [[1], [2]], [[1], [2], [4]], [[1], [2], []], [[1], ["2"], [3]]],
)
def test_parse_parts_errors(parts):
    with pytest.raises(ParseError):
        parse_parts(json.dumps({"parts": parts}), 3, 3)


def test_parse_parts_bad_json():
    with pytest.raises(ParseError):
        parse_parts("{", 3, 3)
    with pytest.raises(ParseError):
        parse_parts("[1]", 3, 3)


def test_parts_of():
    assert parts_of(Bipartition((0, 1, 1)).labels, 2) == [[0], [1, 2]]
