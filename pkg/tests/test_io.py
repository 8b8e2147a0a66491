from __future__ import annotations

import pytest

from bnrank.divisor import NegativeCertificate, PositiveCertificate
from bnrank.io import (
    ParseError,
    format_certificate,
    format_divisor,
    format_graph,
    parse_certificate,
    parse_divisor,
    parse_graph,
)


def test_graph_roundtrip(graphs):
    for g in graphs.values():
        assert parse_graph(format_graph(g)) == g


def test_graph_comments_and_default_multiplicity():
    text = "# a triangle\n\ngraph 3 3\ne 0 1\ne 1 2 1\n# trailing\ne 0 2\n"
    g = parse_graph(text)
    assert g.edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))


@pytest.mark.parametrize(
    "text, line",
    [
        ("graph 3 1\ne 0 1 x\n", 2),
        ("graph 2 1\ne 0 0\n", 2),
        ("graph 2 1\ne 0 5\n", 2),
        ("graph 2 1\ne 0 1 -2\n", 2),
        ("# c\ngrph 2 1\n", 2),
        ("graph 3 2\ne 0 1\ne 1 0 2\n", 3),
        ("graph 2 1\nedge 0 1\n", 2),
    ],
)
def test_graph_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text, source="g.txt")
    assert info.value.line == line
    assert f"g.txt:{line}:" in str(info.value)


def test_graph_whole_file_errors():
    with pytest.raises(ParseError, match="declares 2 edges"):
        parse_graph("graph 3 2\ne 0 1\n")
    with pytest.raises(ParseError, match="not connected"):
        parse_graph("graph 3 1\ne 0 1\n")
    with pytest.raises(ParseError, match="missing"):
        parse_graph("# nothing\n")


def test_divisor_format():
    assert parse_divisor("div 1 -2 3\n") == (1, -2, 3)
    assert parse_divisor(format_divisor((0, 4))) == (0, 4)
    with pytest.raises(ParseError):
        parse_divisor("div 1 a\n")
    with pytest.raises(ParseError):
        parse_divisor("div 1\ndiv 2\n")


def test_certificate_roundtrip():
    pos = PositiveCertificate((2, -1, -1))
    neg = NegativeCertificate((0, 1), (-3, 3))
    assert format_certificate(pos) == "cert positive q=2,-1,-1"
    assert format_certificate(neg) == "cert negative pi=0,1 q=-3,3"
    assert parse_certificate(format_certificate(pos)) == pos
    assert parse_certificate(format_certificate(neg)) == neg
    with pytest.raises(ParseError):
        parse_certificate("cert positive pi=0,1")
