import pytest
from hypothesis import given, settings, strategies as st

from chordpoly.graph import (
    FALSE_TWIN,
    PENDANT,
    START,
    TRUE_TWIN,
    DhConstruction,
    Graph,
    GraphFormatError,
    NotConnectedError,
    OracleSizeError,
    Step,
    bf_alpha,
    bf_asteroidal_number,
    bf_kappa,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    is_asteroidal,
    parse_graph,
    path_graph,
    random_dh,
    recognize_dh,
    star_graph,
    subdivided_claw,
)


def test_parse_graph_roundtrip():
    g = parse_graph("# a path\n4 3\n0 1\n1 2\n2 3\n")
    assert g == path_graph(4)
    assert parse_graph(g.to_text()) == g


@pytest.mark.parametrize(
    "text",
    ["3 1\n0 3\n", "3 2\n0 1\n", "3 1\n1 1\n", "3 2\n0 1\n1 0\n", "x\n", "3 1\n0 1 2\n"],
)
def test_parse_graph_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_components():
    assert connected_components(Graph.from_edges(0, [])) == []
    assert connected_components(cycle_graph(5)) == [[0, 1, 2, 3, 4]]
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert connected_components(two) == [[0, 1, 2], [3, 4, 5]]


def test_alpha():
    assert bf_alpha(complete_graph(4)) == 1
    assert bf_alpha(cycle_graph(5)) == 2
    assert bf_alpha(Graph.from_edges(3, [])) == 3


def test_kappa():
    assert bf_kappa(complete_graph(4)) == 1
    assert bf_kappa(cycle_graph(5)) == 3
    assert bf_kappa(disjoint_union(path_graph(2), path_graph(2))) == 2


def test_asteroidal_number():
    assert bf_asteroidal_number(star_graph(3))[0] == 2
    assert is_asteroidal(cycle_graph(6), {0, 2, 4})
    size, witness = bf_asteroidal_number(subdivided_claw())
    assert size == 3 and set(witness) == {4, 5, 6}
    assert bf_asteroidal_number(complete_graph(4))[0] == 1
    assert bf_asteroidal_number(Graph.from_edges(1, []))[0] == 1


def test_oracle_cap():
    with pytest.raises(OracleSizeError):
        bf_alpha(path_graph(17))
    assert bf_alpha(path_graph(17), cap=17) == 9


def test_construction_replay_p4():
    c = DhConstruction(
        [Step(START, 2), Step(PENDANT, 1, 2), Step(PENDANT, 0, 1), Step(PENDANT, 3, 2)]
    )
    assert c.replay() == path_graph(4)


def test_construction_validation():
    with pytest.raises(ValueError):
        DhConstruction([Step(START, 0), Step(PENDANT, 1, 5)])
    with pytest.raises(ValueError):
        DhConstruction([Step(START, 0), Step(FALSE_TWIN, 1, 0)])


def test_recognize():
    assert recognize_dh(cycle_graph(5)) is None
    k3 = recognize_dh(complete_graph(3))
    assert [s.kind for s in k3.steps] == [START, TRUE_TWIN, TRUE_TWIN]
    assert recognize_dh(path_graph(4)).replay() == path_graph(4)
    with pytest.raises(NotConnectedError):
        recognize_dh(Graph.from_edges(2, []))


def test_random_dh_examples():
    assert random_dh(1, 3)[0] == Graph.from_edges(1, [])
    g, _ = random_dh(4, 7)
    assert g.is_connected() and recognize_dh(g) is not None
    for seed in range(1, 101):
        assert recognize_dh(random_dh(10, seed)[0]) is not None


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_recognize_replays_to_input(n, seed):
    g, _ = random_dh(n, seed)
    c = recognize_dh(g)
    assert c is not None and c.replay() == g


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_oracle_orderings(n, seed):
    g, _ = random_dh(n, seed)
    assert bf_alpha(g) <= bf_kappa(g)
    assert bf_asteroidal_number(g)[0] <= bf_alpha(g)
