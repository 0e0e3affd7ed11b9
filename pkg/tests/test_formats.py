from fractions import Fraction

import pytest

from reciprocity.arrangement import braid_arrangement
from reciprocity.formats import (
    ParseError,
    dump_arrangement,
    dump_graph,
    dump_polytope,
    dump_poset,
    parse_arrangement,
    parse_graph,
    parse_polytope,
    parse_poset,
)
from reciprocity.geometry import Polytope
from reciprocity.graph_coloring import Graph
from reciprocity.poset import Poset, PosetError


def test_poset_with_comments():
    p = parse_poset("# the poset Lambda\n3\n1 3  # a1 < a3\n\n2 3\n")
    assert p == Poset(3, [(1, 3), (2, 3)])


def test_named_header():
    a = parse_arrangement("d=2\n")
    assert a.dim == 2 and len(a) == 0
    assert parse_graph("n = 2\n1 2\n").edges == ((1, 2),)


def test_rationals():
    a = parse_arrangement("2\n1/2 -3 7/4\n")
    h = a.hyperplanes[0]
    assert h.normal == (1, -6) and h.offset == Fraction(7, 2)
    p = parse_polytope("1\n0\n1/2\n")
    assert p.vertices == ((0,), (Fraction(1, 2),))


@pytest.mark.parametrize(
    "parser, text, line",
    [
        (parse_poset, "3\n1 2\n2 x\n", 3),
        (parse_poset, "3\n1 4\n", 2),
        (parse_graph, "2\n1 2 3\n", 2),
        (parse_arrangement, "2\n1 0\n", 2),
        (parse_arrangement, "2\n0 0 1\n", 2),
        (parse_arrangement, "2\n1 1/0 3\n", 2),
        (parse_polytope, "2\n0 0\n1.5 0\n", 3),
        (parse_polytope, "# comment\nthree\n", 2),
    ],
)
def test_errors_carry_line_numbers(parser, text, line):
    with pytest.raises(ParseError) as e:
        parser(text)
    assert e.value.line == line and str(e.value).startswith(f"line {line}:")


def test_empty_files():
    with pytest.raises(ParseError):
        parse_poset("# nothing\n")
    with pytest.raises(ParseError):
        parse_polytope("2\n")


def test_cycle_is_not_a_poset():
    with pytest.raises(PosetError, match="antisymmetry"):
        parse_poset("2\n1 2\n2 1\n")


def test_roundtrips():
    p = Poset(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
    assert parse_poset(dump_poset(p)) == p
    g = Graph.cycle(5)
    assert parse_graph(dump_graph(g)) == g
    a = braid_arrangement(4)
    assert parse_arrangement(dump_arrangement(a)) == a
    q = Polytope([(0, 0), (Fraction(1, 3), 0), (0, 2)])
    assert parse_polytope(dump_polytope(q)) == q
