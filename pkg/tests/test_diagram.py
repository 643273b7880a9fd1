import pytest
from hypothesis import given, settings, strategies as st

from chordpoly.diagram import (
    ChordDiagram,
    DiagramFormatError,
    arc_is_empty,
    bf_max_series_independent,
    canonical_cycle,
    empty_arc_flags,
    intersection_graph,
    max_series_independent,
    parse_diagram,
    peripheral_chords,
    random_diagram,
)
from chordpoly.graph import Graph, complete_graph, cycle_graph


def test_parse():
    d = parse_diagram("a b a b")
    assert d.n == 2 and d.crosses(0, 1)
    d = parse_diagram("0 0 1 1")
    assert d.n == 2 and not d.crosses(0, 1)


@pytest.mark.parametrize("text", ["0 1 0", "0 1 1 1", "0 0 0 0"])
def test_parse_rejects(text):
    with pytest.raises(DiagramFormatError):
        parse_diagram(text)


def test_parse_error_names_token():
    with pytest.raises(DiagramFormatError, match="'z'"):
        parse_diagram("0 0 z 1 1 2")


def test_intersection_graph():
    assert intersection_graph(parse_diagram("0 1 0 1")) == complete_graph(2)
    assert intersection_graph(parse_diagram("0 0 1 1 2 2")) == Graph.from_edges(3, [])
    assert intersection_graph(canonical_cycle(5)) == cycle_graph(5)


def test_canonical_cycle():
    d = canonical_cycle(4)
    assert d.ends == ((0, 3), (2, 5), (4, 7), (1, 6))
    assert intersection_graph(d) == cycle_graph(4)
    assert intersection_graph(canonical_cycle(3)) == complete_graph(3)
    for n in range(4, 17):
        assert intersection_graph(canonical_cycle(n)) == cycle_graph(n)


def test_peripheral_examples():
    flags = empty_arc_flags(parse_diagram("0 1 0 1"))
    assert flags == [(True, True), (True, True)]
    chords, _ = peripheral_chords(canonical_cycle(5))
    assert chords == set(range(5))
    d = parse_diagram("0 1 1 2 2 0")
    chords, empty = peripheral_chords(d)
    assert chords == {0, 1, 2}
    assert [(a.start, a.end) for a in empty[0]] == [(5, 0)]


def test_series_examples():
    assert max_series_independent(parse_diagram("0 1 0 1")) == 1
    assert max_series_independent(parse_diagram("0 0 1 1 2 2")) == 3
    assert max_series_independent(canonical_cycle(5)) == 2
    assert bf_max_series_independent(canonical_cycle(5)) == 2


def test_random_diagram():
    assert random_diagram(1, 0).word == (0, 0)
    d = random_diagram(3, 5)
    assert parse_diagram(d.to_text()) == d
    for seed in range(200):
        d = random_diagram(6, seed)
        assert sorted(d.word) == sorted(list(range(6)) * 2)


diagrams = st.builds(random_diagram, st.integers(1, 9), st.integers(0, 10**6))


@settings(max_examples=200, deadline=None)
@given(diagrams)
def test_empty_flags_match_direct_scan(d):
    for c, flags in enumerate(empty_arc_flags(d)):
        assert flags == tuple(arc_is_empty(d, a) for a in d.arcs(c))


@settings(max_examples=150, deadline=None)
@given(diagrams)
def test_intersection_graph_matches_pairwise(d):
    g = intersection_graph(d)
    for a in range(d.n):
        for b in range(a + 1, d.n):
            assert g.has_edge(a, b) == d.crosses(a, b)


@settings(max_examples=150, deadline=None)
@given(diagrams, st.integers(0, 100))
def test_rotation_keeps_graph(d, k):
    r = d.rotate(k)
    relabel = parse_diagram(r.word)  # labels renumbered by first occurrence
    assert intersection_graph(r) == intersection_graph(d)
    assert relabel.n == d.n


@settings(max_examples=100, deadline=None)
@given(st.builds(random_diagram, st.integers(1, 6), st.integers(0, 10**6)))
def test_series_matches_oracle(d):
    assert max_series_independent(d) == bf_max_series_independent(d)


def test_diagram_validation():
    with pytest.raises(DiagramFormatError):
        ChordDiagram((0, 1, 1, 2))
