import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chordpoly.graph import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_dh,
    recognize_dh,
    star_graph,
    subdivided_claw,
)
from chordpoly.splittree import (
    CLIQUE,
    STAR,
    build_split_tree,
    is_split,
    join_edges,
    join_recompose,
    leaf_count,
    prune,
    prune_with_history,
    to_dot,
    tree_splits,
)


def tree_of(g):
    return build_split_tree(recognize_dh(g))


def test_is_split_examples():
    k13 = star_graph(3)  # centre 0
    assert is_split(k13, {1, 2}, {0, 3})
    assert is_split(path_graph(4), {0, 1}, {2, 3})
    c5 = cycle_graph(5)
    for side in combinations(range(5), 2):  # every 2|3 bipartition
        assert not is_split(c5, set(side), set(range(5)) - set(side))


def test_k3_is_one_clique():
    t = tree_of(complete_graph(3))
    (node,) = t.nodes.values()
    assert node.kind == CLIQUE and t.vertices() == [0, 1, 2]
    assert join_recompose(t) == complete_graph(3)


def test_k13_is_one_star():
    t = tree_of(star_graph(3))
    (node,) = t.nodes.values()
    assert node.kind == STAR and t.labels[node.center] == 0


def test_p4_two_stars():
    t = tree_of(path_graph(4))
    t.check()
    assert len(t.nodes) == 2 and all(n.kind == STAR for n in t.nodes.values())
    ((m1, m2),) = t.edges()
    a, b = t.nodes[t.owner[m1]], t.nodes[t.owner[m2]]
    assert a.center != m1 and b.center != m2  # leaf-leaf pairing
    centres = {t.labels[n.center] for n in t.nodes.values()}
    assert centres == {1, 2}
    assert join_recompose(t) == path_graph(4)


def test_prune_examples():
    k3 = tree_of(complete_graph(3))
    assert prune(k3) == k3
    p4 = tree_of(path_graph(4))
    assert prune(p4).nodes == p4.nodes
    claw = prune(tree_of(subdivided_claw()))
    assert leaf_count(claw) == 3


def test_leaf_count_examples():
    assert leaf_count(prune(tree_of(star_graph(3)))) == 2
    assert leaf_count(prune(tree_of(path_graph(4)))) == 2
    assert leaf_count(prune(tree_of(subdivided_claw()))) == 3


def test_small_graphs_are_trivial():
    t = tree_of(path_graph(2))
    assert t.trivial and join_recompose(t) == path_graph(2)
    assert leaf_count(t) == 2


def test_dot_export():
    text = to_dot(tree_of(path_graph(4)))
    assert text.startswith("graph split_tree {")
    assert text.count(" -- ") == 1 and text.count("star") == 2


dh = st.builds(random_dh, st.integers(1, 12), st.integers(0, 10**6))


@settings(max_examples=200, deadline=None)
@given(dh)
def test_build_recompose_and_splits(case):
    g, c = case
    t = build_split_tree(c)
    t.check()
    assert join_recompose(t) == g
    for left, right in tree_splits(t):
        assert is_split(g, left, right)


@settings(max_examples=100, deadline=None)
@given(dh, st.integers(0, 10**6))
def test_join_order_independent(case, seed):
    _, c = case
    t = build_split_tree(c)
    order = list(range(len(t.edges())))
    random.Random(seed).shuffle(order)
    assert join_edges(t, order) == join_edges(t)


@settings(max_examples=150, deadline=None)
@given(dh, st.integers(0, 10**6))
def test_prune_properties(case, seed):
    _, c = case
    t = build_split_tree(c)
    p = prune(t)
    p.check()
    assert prune(p).nodes == p.nodes
    if len(p.nodes) > 1:
        for x, node in p.nodes.items():
            if p.degree(x) == 1:
                (m,) = p.markers(x)
                assert node.kind == STAR and node.center != m
    shuffled = prune_with_history(t, random.Random(seed)).tree
    assert leaf_count(shuffled) == leaf_count(p)


def test_join_edges_uses_labels():
    t = tree_of(path_graph(4))
    assert join_edges(t) == {(0, 1), (1, 2), (2, 3)}
