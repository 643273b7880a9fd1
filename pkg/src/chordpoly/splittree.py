"""Split decomposition trees of distance hereditary graphs.

Every node is a clique or a star over *slots*.  A slot is either ordinary
(it carries a graph vertex label) or a marker paired with exactly one
marker slot in a neighbouring node; the pairings are the tree edges.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import FALSE_TWIN, PENDANT, TRUE_TWIN, DhConstruction, Graph

CLIQUE = "clique"
STAR = "star"


@dataclass(frozen=True)
class Node:
    kind: str
    slots: frozenset
    center: int | None = None

    def adjacent(self, a: int, b: int) -> bool:
        if a == b:
            return False
        if self.kind == CLIQUE:
            return True
        return self.center in (a, b)

    def neighbours(self, s: int) -> list[int]:
        if self.kind == CLIQUE or s == self.center:
            return [t for t in self.slots if t != s]
        return [self.center]

    def is_universal(self, s: int) -> bool:
        return self.kind == CLIQUE or s == self.center


@dataclass(frozen=True)
class SplitTree:
    """Immutable split tree.

    ``labels`` maps ordinary slots to graph vertices and ``mate`` pairs the
    marker slots.  ``trivial`` marks the one-node stand-in used for graphs on
    fewer than three vertices.
    """

    nodes: dict
    labels: dict
    mate: dict
    trivial: bool = False
    owner: dict = field(init=False, repr=False, compare=False)
    _markers: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        owner = {s: x for x, node in self.nodes.items() for s in node.slots}
        markers: dict[int, list] = {x: [] for x in self.nodes}
        for s in sorted(self.mate):
            markers[owner[s]].append(s)
        object.__setattr__(self, "owner", owner)
        object.__setattr__(self, "_markers", markers)

    def markers(self, x: int) -> list[int]:
        return self._markers[x]

    def neighbours(self, x: int) -> list[int]:
        return sorted(self.owner[self.mate[s]] for s in self.markers(x))

    def degree(self, x: int) -> int:
        return len(self.markers(x))

    def edges(self) -> list[tuple[int, int]]:
        """Tree edges as marker pairs ``(s, mate[s])`` with ``s < mate[s]``."""
        return sorted((s, t) for s, t in self.mate.items() if s < t)

    def vertices(self) -> list:
        return sorted(self.labels.values())

    def node_vertices(self, x: int) -> list:
        return sorted(self.labels[s] for s in self.nodes[x].slots if s in self.labels)

    def side_vertices(self, s: int) -> set:
        """Graph vertices on the far side of marker ``s`` (beyond its mate)."""
        start = self.owner[self.mate[s]]
        blocked = self.owner[s]
        seen = {start}
        stack = [start]
        found = set()
        while stack:
            x = stack.pop()
            found.update(self.node_vertices(x))
            for y in self.neighbours(x):
                if y != blocked and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return found

    def is_path(self) -> bool:
        return all(self.degree(x) <= 2 for x in self.nodes)

    def check(self) -> None:
        """Raise ``AssertionError`` if any structural invariant fails."""
        owner = self.owner
        assert set(self.labels).isdisjoint(self.mate), "slot both ordinary and marker"
        for x, node in self.nodes.items():
            assert node.kind in (CLIQUE, STAR)
            assert self.trivial or len(node.slots) >= 3, f"node {x} too small"
            if node.kind == STAR:
                assert node.center in node.slots, f"star {x} lost its centre"
            for s in node.slots:
                assert s in self.labels or s in self.mate, f"slot {s} unaccounted"
        for s, t in self.mate.items():
            assert self.mate.get(t) == s, "pairing not symmetric"
            assert owner[s] != owner[t], "marker paired inside a node"
            a, b = self.nodes[owner[s]], self.nodes[owner[t]]
            assert not (a.kind == CLIQUE and b.kind == CLIQUE), "clique-clique edge"
            if a.kind == STAR and b.kind == STAR:
                assert (a.center == s) == (b.center == t), "star edge pairs centre with leaf"
        assert len(set(self.labels.values())) == len(self.labels), "label reused"
        if self.nodes:
            edges = len(self.mate) // 2
            assert edges == len(self.nodes) - 1, "not a tree"
            first = min(self.nodes)
            seen, stack = {first}, [first]
            while stack:
                for y in self.neighbours(stack.pop()):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            assert len(seen) == len(self.nodes), "tree is disconnected"


# ---------------------------------------------------------------------------
# incremental construction
# ---------------------------------------------------------------------------


class _Builder:
    def __init__(self):
        self.kind: dict[int, str] = {}
        self.slots: dict[int, set] = {}
        self.center: dict[int, int | None] = {}
        self.owner: dict[int, int] = {}
        self.labels: dict[int, int] = {}
        self.mate: dict[int, int] = {}
        self.slot_of: dict[int, int] = {}
        self._next_slot = 0
        self._next_node = 0

    def new_slot(self, label=None) -> int:
        s = self._next_slot
        self._next_slot += 1
        if label is not None:
            self.labels[s] = label
            self.slot_of[label] = s
        return s

    def new_node(self, kind, slots, center=None) -> int:
        x = self._next_node
        self._next_node += 1
        self.kind[x] = kind
        self.slots[x] = set(slots)
        self.center[x] = center
        for s in slots:
            self.owner[s] = x
        return x

    def add(self, x: int, s: int) -> None:
        self.slots[x].add(s)
        self.owner[s] = x

    def detach(self, u: int) -> int:
        """Swap slot ``u`` out of its node for a fresh marker; return the marker."""
        x = self.owner[u]
        m = self.new_slot()
        self.slots[x].discard(u)
        self.add(x, m)
        if self.center[x] == u:
            self.center[x] = m
        return m

    def pair(self, a: int, b: int) -> None:
        self.mate[a] = b
        self.mate[b] = a

    def freeze(self, trivial=False) -> SplitTree:
        nodes = {
            x: Node(self.kind[x], frozenset(self.slots[x]), self.center[x])
            for x in self.slots
        }
        return SplitTree(nodes, dict(self.labels), dict(self.mate), trivial)


def _third_vertex(b: _Builder, kind: str, v: int, t: int) -> None:
    """Turn the two-vertex stand-in into a genuine three-vertex node."""
    (x,) = b.slots
    sv, st = b.new_slot(v), b.slot_of[t]
    (so,) = b.slots[x] - {st}
    b.add(x, sv)
    if kind == TRUE_TWIN:
        b.kind[x], b.center[x] = CLIQUE, None
    elif kind == FALSE_TWIN:
        b.kind[x], b.center[x] = STAR, so
    else:
        b.kind[x], b.center[x] = STAR, st


def build_split_tree(c: DhConstruction) -> SplitTree:
    """Standard split tree of the graph built by ``c``.

    Each step touches only the node holding the target vertex.  The rules
    never create a clique-clique edge or a centre-leaf star edge, so no
    merging pass is required afterwards.
    """
    b = _Builder()
    steps = c.steps
    first = steps[0].vertex
    b.new_node(CLIQUE, [b.new_slot(first)])
    for step in steps[1:]:
        v, t = step.vertex, step.target
        if len(b.labels) == 1:
            (x,) = b.slots
            b.add(x, b.new_slot(v))
            continue
        if len(b.labels) == 2:
            _third_vertex(b, step.kind, v, t)
            continue
        u = b.slot_of[t]
        x = b.owner[u]
        kind, center = b.kind[x], b.center[x]
        if step.kind == TRUE_TWIN:
            if kind == CLIQUE:
                b.add(x, b.new_slot(v))
            else:
                m1 = b.detach(u)
                m2 = b.new_slot()
                b.new_node(CLIQUE, [u, b.new_slot(v), m2])
                b.pair(m1, m2)
        elif step.kind == FALSE_TWIN:
            if kind == STAR and center != u:
                b.add(x, b.new_slot(v))
            else:
                m1 = b.detach(u)
                m2 = b.new_slot()
                b.new_node(STAR, [u, b.new_slot(v), m2], center=m2)
                b.pair(m1, m2)
        elif step.kind == PENDANT:
            if kind == STAR and center == u:
                b.add(x, b.new_slot(v))
            else:
                m1 = b.detach(u)
                m2 = b.new_slot()
                b.new_node(STAR, [u, b.new_slot(v), m2], center=u)
                b.pair(m1, m2)
        else:
            raise ValueError(f"unknown step kind {step.kind!r}")
    return b.freeze(trivial=len(b.labels) < 3)


# ---------------------------------------------------------------------------
# recomposition
# ---------------------------------------------------------------------------


def join_edges(t: SplitTree, order=None) -> set:
    """Edges (as label pairs) of the graph obtained by joining across every tree edge.

    ``order`` optionally permutes the tree edges; the result must not depend on it.
    """
    adj: dict[int, set] = {}
    for node in t.nodes.values():
        for s in node.slots:
            adj[s] = set(node.neighbours(s))
    parent = {x: x for x in t.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = t.edges()
    if order is not None:
        edges = [edges[i] for i in order]
    for m1, m2 in edges:
        a, b = find(t.owner[m1]), find(t.owner[m2])
        assert a != b, "tree edge joins a part with itself"
        n1, n2 = adj.pop(m1), adj.pop(m2)
        for s in n1:
            adj[s].discard(m1)
            adj[s] |= n2
        for s in n2:
            adj[s].discard(m2)
            adj[s] |= n1
        parent[a] = b
    result = set()
    for s, ns in adj.items():
        for r in ns:
            u, v = t.labels[s], t.labels[r]
            result.add((min(u, v), max(u, v)))
    return result


def join_recompose(t: SplitTree, order=None) -> Graph:
    """Graph on the tree's labels, which must be exactly ``0..n-1``."""
    labels = t.vertices()
    if labels != list(range(len(labels))):
        raise ValueError("labels are not 0..n-1; use join_edges")
    return Graph.from_edges(len(labels), join_edges(t, order))


def is_split(g: Graph, v1, v2) -> bool:
    v1, v2 = set(v1), set(v2)
    if v1 & v2 or v1 | v2 != set(range(g.n)):
        raise ValueError("v1 and v2 must partition the vertex set")
    if len(v1) < 2 or len(v2) < 2:
        return False
    frontier1 = {a for a in v1 if g.adj[a] & v2}
    frontier2 = {b for b in v2 if g.adj[b] & v1}
    return all(g.has_edge(a, b) for a in frontier1 for b in frontier2)


# ---------------------------------------------------------------------------
# pruning
# ---------------------------------------------------------------------------


class Removal(NamedTuple):
    """One pruning step: ``mate`` turned ordinary and now carries ``label``,
    one of the removed node's vertices; ``held`` maps the node's ordinary
    slots to the labels they carried at removal time."""

    node: int
    marker: int
    mate: int
    label: int
    held: dict


@dataclass(frozen=True)
class Pruning:
    """Pruned tree plus the removed leaves in removal order."""

    tree: SplitTree
    removed: tuple


def _removable(nodes, marks, x) -> int | None:
    if len(marks[x]) != 1:
        return None
    (m,) = marks[x]
    return m if nodes[x].is_universal(m) else None


def prune_with_history(t: SplitTree, rng: random.Random | None = None) -> Pruning:
    """Remove leaves whose marker is universal in the leaf until none remain.

    The smallest removable node id goes first; with ``rng`` a random
    removable leaf is taken instead (used to probe order dependence).
    """
    nodes = dict(t.nodes)
    labels = dict(t.labels)
    mate = dict(t.mate)
    owner = dict(t.owner)
    marks = {x: set(ms) for x, ms in t._markers.items()}
    removed = []
    candidates = [x for x in nodes if _removable(nodes, marks, x) is not None]
    heapq.heapify(candidates)
    while candidates and len(nodes) > 1:
        if rng is None:
            x = heapq.heappop(candidates)
        else:
            x = candidates.pop(rng.randrange(len(candidates)))
        if x not in nodes:
            continue
        m = _removable(nodes, marks, x)
        if m is None:
            continue
        other = mate.pop(m)
        del mate[other]
        y = owner[other]
        marks[y].discard(other)
        del marks[x]
        held = {s: labels[s] for s in nodes[x].slots if s in labels}
        keep = min(held.values())
        labels[other] = keep
        for s in nodes.pop(x).slots:
            labels.pop(s, None)
            owner.pop(s, None)
        removed.append(Removal(x, m, other, keep, held))
        if _removable(nodes, marks, y) is not None:
            if rng is None:
                heapq.heappush(candidates, y)
            else:
                candidates.append(y)
    return Pruning(SplitTree(nodes, labels, mate, t.trivial), tuple(removed))


def prune(t: SplitTree) -> SplitTree:
    return prune_with_history(t).tree


def leaf_count(t: SplitTree) -> int:
    """Nodes of degree at most one, floored at 2 for one- and two-node trees."""
    leaves = sum(1 for x in t.nodes if t.degree(x) <= 1)
    if len(t.nodes) <= 2:
        return max(leaves, 2)
    return leaves


def tree_splits(t: SplitTree):
    """Vertex bipartition induced by each tree edge."""
    everything = set(t.vertices())
    for m1, _ in t.edges():
        side = t.side_vertices(m1)
        yield side, everything - side


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def _slot_name(t: SplitTree, s: int) -> str:
    if s in t.labels:
        return str(t.labels[s])
    return f"m{s}"


def to_dot(t: SplitTree, name: str = "split_tree") -> str:
    lines = [f"graph {name} {{", "  node [shape=record];"]
    for x in sorted(t.nodes):
        node = t.nodes[x]
        ordinary = ", ".join(
            _slot_name(t, s) for s in sorted(node.slots, key=lambda s: t.labels.get(s, -1))
            if s in t.labels
        )
        markers = ", ".join(_slot_name(t, s) for s in t.markers(x))
        fields = [f"{node.kind} {x}"]
        if node.kind == STAR:
            fields.append(f"centre: {_slot_name(t, node.center)}")
        fields.append(f"vertices: {ordinary}")
        fields.append(f"markers: {markers}")
        label = "|".join(f.replace("{", "").replace("}", "") for f in fields)
        lines.append(f'  n{x} [label="{{{label}}}"];')
    for m1, m2 in t.edges():
        a, b = t.owner[m1], t.owner[m2]
        lines.append(f'  n{a} -- n{b} [label="m{m1}:m{m2}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
