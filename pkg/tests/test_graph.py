import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from lssforest.errors import CycleDetected, DuplicateEdge, ParseError, SelfLoop, VertexOutOfRange
from lssforest.graph import (
    Forest,
    induced_subgraph,
    is_peeling_order,
    neighborhood,
    parse_forest,
    path_graph,
    peeling_order,
    random_forest,
    serialize,
    star_graph,
)

FIG1_TEXT = "n=11; 1-2 2-3 2-4 2-5 3-6 3-7 3-8 5-9 5-10 5-11"


@st.composite
def forests(draw, max_n=12):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_n))
    return random_forest(random.Random(seed), n)


def test_parse_figure1():
    F = parse_forest(FIG1_TEXT)
    assert F.n == 11
    assert len(F.edges) == 10
    assert neighborhood(F, 2) == {1, 3, 4, 5}
    assert neighborhood(F, 3) == {2, 6, 7, 8}
    assert neighborhood(F, 5) == {2, 9, 10, 11}


def test_parse_single_vertex():
    F = parse_forest("n=1;")
    assert F.n == 1 and not F.edges
    assert neighborhood(F, 1) == frozenset()


def test_parse_multiline_with_comments():
    text = "# a path\nn=4;\n1-2 2-3\n# trailing\n3-4\n"
    assert parse_forest(text) == path_graph(4)


def test_isolated_vertices_allowed():
    F = parse_forest("n=6; 1-2")
    assert F.vertices == frozenset(range(1, 7))
    assert F.degree(6) == 0


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("n=3; 1-2 2-3 3-1", CycleDetected, 1),
        ("n=3;\n1-2\n2-2", SelfLoop, 3),
        ("n=3;\n1-2\n2-1", DuplicateEdge, 3),
        ("n=3;\n1-2\n\n3-4", VertexOutOfRange, 4),
        ("n=3; 1-2 2_3", ParseError, 1),
        ("1-2 2-3", ParseError, 1),
        ("# only a comment\n", ParseError, None),
    ],
)
def test_parse_errors_name_the_line(text, exc, line):
    with pytest.raises(exc) as info:
        parse_forest(text)
    assert info.value.line == line
    if line is not None:
        assert f"line {line}" in str(info.value)


def test_parse_json():
    doc = {"n": 4, "edges": [[2, 1], [3, 2]]}
    F = parse_forest(json.dumps(doc))
    assert F.sorted_edges == ((1, 2), (2, 3))
    assert F.degree(4) == 0
    with pytest.raises(CycleDetected):
        parse_forest(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}))
    with pytest.raises(ParseError):
        parse_forest('{"n": "x"}')


def test_serialize_sorted_and_exact():
    F = parse_forest("n=5; 4-5 1-3 3-2")
    assert serialize(F) == "n=5; 1-3 2-3 4-5\n"
    assert serialize(parse_forest("n=1;")) == "n=1;\n"


@settings(max_examples=500, deadline=None)
@given(forests(max_n=20))
def test_text_round_trip(F):
    assert parse_forest(serialize(F)) == F
    assert parse_forest(F.to_json()) == F


def test_neighborhood_out_of_range(fig1):
    with pytest.raises(VertexOutOfRange):
        neighborhood(fig1, 12)
    with pytest.raises(VertexOutOfRange):
        neighborhood(fig1, 0)


def test_induced_subgraph_examples(fig1):
    G = induced_subgraph(fig1, set(range(1, 12)) - {2})
    assert G.edges == {(3, 6), (3, 7), (3, 8), (5, 9), (5, 10), (5, 11)}
    assert 2 not in G.vertices and G.n == 11
    assert induced_subgraph(fig1, range(1, 12)) == fig1

    keep = set(range(1, 12)) - {3, 5}
    expected = {e for e in fig1.edges if e[0] in keep and e[1] in keep}
    assert expected == {(1, 2), (2, 4)}
    assert induced_subgraph(fig1, keep).edges == expected


def test_induced_subgraph_rejects_unknown_vertex(fig1):
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(fig1, {1, 12})
    G = induced_subgraph(fig1, {1, 2, 3})
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(G, {4})


@settings(max_examples=200, deadline=None)
@given(forests(), st.data())
def test_induced_subgraph_composes(F, data):
    verts = sorted(F.vertices)
    A = set(data.draw(st.lists(st.sampled_from(verts), unique=True)))
    B = set(data.draw(st.lists(st.sampled_from(verts), unique=True)))
    lhs = induced_subgraph(induced_subgraph(F, A), A & B)
    assert lhs == induced_subgraph(F, A & B)


def _lex_first_valid(F):
    return min(p for p in itertools.permutations(sorted(F.vertices)) if is_peeling_order(F, p))


def test_peeling_path_matches_enumeration():
    F = path_graph(3)
    valid = [p for p in itertools.permutations([1, 2, 3]) if is_peeling_order(F, p)]
    assert peeling_order(F) == [1, 2, 3]
    assert tuple(peeling_order(F)) in valid


def test_peeling_single_vertex():
    assert peeling_order(Forest(1)) == [1]


def test_peeling_star_smallest_first():
    # the centre becomes eligible once only one leaf is left, and 1 < 5
    F = star_graph(5)
    assert peeling_order(F) == [2, 3, 4, 1, 5]
    assert is_peeling_order(F, [2, 3, 4, 5, 1])
    assert tuple(peeling_order(F)) == _lex_first_valid(F)


@settings(max_examples=60, deadline=None)
@given(forests(max_n=6))
def test_peeling_is_lexicographically_first_valid_order(F):
    assert tuple(peeling_order(F)) == _lex_first_valid(F)


@settings(max_examples=200, deadline=None)
@given(forests(max_n=20))
def test_peeling_invariant_and_reverse_prefixes(F):
    order = peeling_order(F)
    assert is_peeling_order(F, order)
    for k in range(len(order)):
        # Forest() re-validates acyclicity
        induced_subgraph(F, order[k:])


def test_forest_constructor_validates():
    with pytest.raises(CycleDetected):
        Forest(3, frozenset({(1, 2), (2, 3), (1, 3)}))
    with pytest.raises(SelfLoop):
        Forest(3, frozenset({(1, 1)}))
