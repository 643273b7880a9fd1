"""Polygon and asteroidal numbers of distance hereditary graphs, with witnesses.

Representations under construction are circular token sequences: chord
tokens are arbitrary hashable labels (graph vertices, or ``("m", slot)``
for split-tree markers) and corners are ``Corner`` objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import ChordDiagram
from .graph import Graph, connected_components, recognize_dh
from .polygon import PolygonRep, verify_corners
from .splittree import (
    CLIQUE,
    SplitTree,
    build_split_tree,
    leaf_count,
    prune_with_history,
)


class NotDistanceHereditaryError(ValueError):
    def __init__(self, component):
        super().__init__(f"component {component} is not distance hereditary")
        self.component = component


class MarkerError(ValueError):
    pass


class Corner:
    """A corner token; identity matters, so two corners never compare equal."""

    __slots__ = ("tag",)

    def __init__(self, tag=None):
        self.tag = tag

    def __repr__(self):
        return "|" if self.tag is None else f"|{self.tag}"


def is_corner(token) -> bool:
    return isinstance(token, Corner)


def marker_token(slot: int):
    return ("m", slot)


# ---------------------------------------------------------------------------
# permutation diagrams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PermDiagram:
    """Chords between two parallel lines, listed left to right on each line."""

    top: tuple
    bottom: tuple

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(set(self.top)) != len(self.top) or set(self.top) != set(self.bottom):
            raise ValueError("each chord needs exactly one end on each line")

    def crosses(self, a, b) -> bool:
        ta, tb = self.top.index(a), self.top.index(b)
        ba, bb = self.bottom.index(a), self.bottom.index(b)
        return (ta < tb) != (ba < bb)

    def mirror(self) -> PermDiagram:
        return PermDiagram(self.top[::-1], self.bottom[::-1])

    def swap(self) -> PermDiagram:
        return PermDiagram(self.bottom, self.top)

    def is_extreme(self, chord) -> bool:
        return chord in (self.top[0], self.top[-1], self.bottom[0], self.bottom[-1])

    def with_top_right(self, chord) -> PermDiagram:
        """Same diagram up to symmetry, with an extreme ``chord`` last on top."""
        if self.top[-1] == chord:
            return self
        if self.top[0] == chord:
            return self.mirror()
        if self.bottom[-1] == chord:
            return self.swap()
        if self.bottom[0] == chord:
            return self.swap().mirror()
        raise ValueError(f"chord {chord!r} is not extreme")

    def tokens(self) -> list:
        """Circle order: corner, top line, corner, bottom line walked backwards."""
        return [Corner(0), *self.top, Corner(1), *reversed(self.bottom)]

    def to_polygon_rep(self) -> PolygonRep:
        word, gaps, _ = tokens_to_word(self.tokens())
        return PolygonRep(ChordDiagram(word), gaps)

    @classmethod
    def from_polygon_rep(cls, rep: PolygonRep) -> PermDiagram:
        if rep.k != 2 or not rep.is_valid():
            raise ValueError("need a valid 2-corner representation")
        a, b = rep.corners
        word = rep.diagram.word
        top = word[a + 1:b + 1]
        bottom = (word[b + 1:] + word[:a + 1])[::-1]
        return cls(top, bottom)


def tokens_to_word(tokens) -> tuple[tuple, tuple, list]:
    """Split a token circle into chord labels, corner gaps and the label order.

    Chord labels are renumbered by first appearance unless they already are
    exactly ``0..n-1``.
    """
    chords = [t for t in tokens if not is_corner(t)]
    size = len(chords)
    gaps = set()
    pos = -1
    for t in tokens:
        if is_corner(t):
            gaps.add(pos % size if size else 0)
        else:
            pos += 1
    order = list(dict.fromkeys(chords))
    if all(isinstance(c, int) for c in order) and set(order) == set(range(len(order))):
        word = tuple(chords)
    else:
        index = {c: i for i, c in enumerate(order)}
        word = tuple(index[c] for c in chords)
    return word, tuple(sorted(gaps)), order


# ---------------------------------------------------------------------------
# circular representations with an optional marker chord
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleRep:
    tokens: tuple
    marker: object = None

    def chords(self) -> list:
        return list(dict.fromkeys(t for t in self.tokens if not is_corner(t)))

    def corner_count(self) -> int:
        return len(tokens_to_word(self.tokens)[1])

    def to_polygon_rep(self) -> tuple[PolygonRep, list]:
        word, gaps, order = tokens_to_word(self.tokens)
        return PolygonRep(ChordDiagram(word), gaps), order

    def is_valid(self) -> bool:
        word, gaps, _ = tokens_to_word(self.tokens)
        return verify_corners(ChordDiagram(word), gaps)

    def relabel(self, mapping) -> CircleRep:
        tokens = tuple(t if is_corner(t) else mapping.get(t, t) for t in self.tokens)
        return CircleRep(tokens, mapping.get(self.marker, self.marker))

    def close_corners(self, chord) -> list:
        """Corner tokens adjacent to an endpoint of ``chord``."""
        n = len(self.tokens)
        found = []
        for i, t in enumerate(self.tokens):
            if t == chord and not is_corner(t):
                for j in (i - 1, (i + 1) % n):
                    c = self.tokens[j]
                    if is_corner(c) and all(c is not f for f in found):
                        found.append(c)
        return found

    @classmethod
    def from_perm(cls, d: PermDiagram, marker=None) -> CircleRep:
        return cls(tuple(d.tokens()), marker)


def _arcs_of(tokens, chord):
    """Token runs ``(e, e')`` and ``(e', e)`` of ``chord``."""
    i, j = [k for k, t in enumerate(tokens) if not is_corner(t) and t == chord]
    return list(tokens[i + 1:j]), list(tokens[j + 1:]) + list(tokens[:i])


def _collapse_corners(tokens) -> list:
    """Drop corners that share a gap with the previous corner."""
    out = []
    for t in tokens:
        if is_corner(t) and out and is_corner(out[-1]):
            continue
        out.append(t)
    if len(out) > 1 and is_corner(out[0]) and is_corner(out[-1]):
        out.pop()
    return out


def combine_reps(r1: CircleRep, r2: CircleRep) -> CircleRep:
    """Representation of the join of two marked representations.

    The two marker chords are cut out and the four remaining runs are
    spliced as W X Y Z.  Corners are then deleted greedily while every chord
    stays satisfied, starting with those next to the marker in ``r1``.  The
    mirror image of ``r2`` is spliced too and the one with fewer corners kept.
    """
    if r1.marker is None or r2.marker is None:
        raise MarkerError("both representations need a flagged marker chord")
    shared = (set(r1.chords()) - {r1.marker}) & (set(r2.chords()) - {r2.marker})
    if shared:
        raise ValueError(f"representations share chords {sorted(map(repr, shared))}")
    close = r1.close_corners(r1.marker)
    w, y = _arcs_of(r1.tokens, r1.marker)
    best = None
    for tokens in (r2.tokens, r2.tokens[::-1]):
        x, z = _arcs_of(tokens, r2.marker)
        rep = CircleRep(tuple(_collapse_corners(_greedy_drop(w + x + y + z, close))))
        if best is None or rep.corner_count() < best.corner_count():
            best = rep
    return best


def _greedy_drop(tokens: list, first: list) -> list:
    # corner order: ``first`` as given, then the rest by position
    ordered = list(first)
    ordered += [t for t in tokens if is_corner(t) and all(t is not o for o in first)]
    for corner in ordered:
        trial = [t for t in tokens if t is not corner]
        word, gaps, _ = tokens_to_word(trial)
        if len(gaps) >= 2 and verify_corners(ChordDiagram(word), gaps):
            tokens = trial
    return tokens


def merge_disjoint(r1: CircleRep, r2: CircleRep) -> CircleRep:
    """Representation of a disjoint union with two fewer corners than the parts.

    Each part is opened just after one of its corners and that corner is
    dropped; the two runs are then placed side by side.
    """
    def opened(tokens):
        i = next(k for k, t in enumerate(tokens) if is_corner(t))
        run = list(tokens[i + 1:]) + list(tokens[:i + 1])
        return run[:-1]

    return CircleRep(tuple(_collapse_corners(opened(r1.tokens) + opened(r2.tokens))))


# ---------------------------------------------------------------------------
# permutation diagrams along a path of the pruned tree
# ---------------------------------------------------------------------------


def _token(t: SplitTree, s: int):
    """Ordinary slots are their label; markers are named by slot."""
    if s in t.labels:
        return t.labels[s]
    return marker_token(s)


def _start_node(t: SplitTree, x: int, link) -> PermDiagram:
    node = t.nodes[x]
    slots = sorted(node.slots, key=lambda s: (s == link, s))
    toks = [_token(t, s) for s in slots]
    if node.kind == CLIQUE:
        return PermDiagram(toks, toks[::-1])
    c = _token(t, node.center)
    leaves = [tok for s, tok in zip(slots, toks) if s != node.center]
    if link == node.center:
        return PermDiagram(leaves + [c], [c] + leaves)
    return PermDiagram([c] + leaves, leaves + [c])


def _extend(t: SplitTree, d: PermDiagram, x: int, entry: int, link) -> PermDiagram:
    """Substitute node ``x`` (entered through slot ``entry``) for the chord at top right."""
    node = t.nodes[x]
    top, bottom = list(d.top), list(d.bottom)
    b = bottom.index(top[-1])
    others = sorted((s for s in node.slots if s != entry), key=lambda s: (s == link, s))
    if node.kind == CLIQUE:
        run = [_token(t, s) for s in others]
        top[-1:] = run
        bottom[b:b + 1] = run[::-1]
    elif node.center == entry:
        run = [_token(t, s) for s in others]
        top[-1:] = run
        bottom[b:b + 1] = run
    else:
        p = _token(t, node.center)
        leaves = [_token(t, s) for s in others if s != node.center]
        top[-1:] = leaves + [p]
        bottom[b:b + 1] = [p]
        bottom += leaves
    return PermDiagram(top, bottom)


def build_path_permrep(t: SplitTree, path: list, outgoing=None) -> PermDiagram:
    """Permutation diagram of the graph represented by the tree path ``path``.

    ``path[0]`` must be an end of the path.  Markers linking consecutive path
    nodes are consumed; ``outgoing`` (a marker slot of the last node) ends up
    as an extreme chord, last on the top line.  Any other marker is kept as
    an ordinary ``("m", slot)`` chord.
    """
    inside = set(path)
    for i, x in enumerate(path):
        linked = [y for y in t.neighbours(x) if y in inside]
        expected = {path[j] for j in (i - 1, i + 1) if 0 <= j < len(path)}
        if set(linked) != expected:
            raise ValueError("segment is not a path in the tree")

    def link_of(i):
        if i + 1 < len(path):
            nxt = path[i + 1]
            return next(s for s in t.markers(path[i]) if t.owner[t.mate[s]] == nxt)
        return outgoing

    link = link_of(0)
    d = _start_node(t, path[0], link)
    for i in range(1, len(path)):
        d = d.with_top_right(marker_token(link))
        entry = t.mate[link]
        link = link_of(i)
        d = _extend(t, d, path[i], entry, link)
    if outgoing is not None:
        d = d.with_top_right(marker_token(outgoing))
    return d


# ---------------------------------------------------------------------------
# witness construction
# ---------------------------------------------------------------------------


def _path_order(t: SplitTree, nodes: set) -> list:
    def deg(x):
        return sum(1 for y in t.neighbours(x) if y in nodes)

    start = min(x for x in nodes if deg(x) <= 1)
    order, prev = [start], None
    while True:
        nxt = [y for y in t.neighbours(order[-1]) if y in nodes and y != prev]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


def _subtree_rep(t: SplitTree, nodes: set) -> CircleRep:
    """Representation of the subtree on ``nodes``; dangling markers act as vertices."""
    def deg(x):
        return sum(1 for y in t.neighbours(x) if y in nodes)

    if all(deg(x) <= 2 for x in nodes):
        return CircleRep.from_perm(build_path_permrep(t, _path_order(t, nodes)))
    leaf = min(x for x in nodes if deg(x) == 1)
    path = [leaf]
    while True:
        nxt = [y for y in t.neighbours(path[-1]) if y in nodes and y not in path]
        (y,) = nxt
        if deg(y) != 2:
            break
        path.append(y)
    outgoing = next(s for s in t.markers(path[-1]) if t.owner[t.mate[s]] == y)
    r1 = CircleRep.from_perm(
        build_path_permrep(t, path, outgoing), marker_token(outgoing)
    )
    rest = _subtree_rep(t, nodes - set(path))
    r2 = CircleRep(rest.tokens, marker_token(t.mate[outgoing]))
    return combine_reps(r1, r2)


def _universal_marker_rep(t: SplitTree, removal) -> CircleRep:
    """Two-corner diagram of a pruned leaf; its marker sits next to both corners."""
    node = t.nodes[removal.node]
    m = marker_token(removal.marker)
    others = [removal.held[s] for s in sorted(removal.held)]
    if node.kind == CLIQUE:
        d = PermDiagram([m] + others, others[::-1] + [m])
    else:
        d = PermDiagram([m] + others, others + [m])
    return CircleRep.from_perm(d, m)


def _connected_rep(g: Graph) -> tuple[CircleRep, SplitTree]:
    construction = recognize_dh(g)
    if construction is None:
        raise NotDistanceHereditaryError(list(range(g.n)))
    tree = build_split_tree(construction)
    pruning = prune_with_history(tree)
    pruned = pruning.tree
    rep = _subtree_rep(pruned, set(pruned.nodes))
    for removal in reversed(pruning.removed):
        r1 = _universal_marker_rep(tree, removal)
        r2 = rep.relabel({removal.label: marker_token(removal.mate)})
        r2 = CircleRep(r2.tokens, marker_token(removal.mate))
        rep = combine_reps(r1, r2)
    return rep, pruned


def build_polygon_rep(g: Graph) -> PolygonRep:
    """Polygon representation of a connected DH graph with the minimum number of corners."""
    if g.n == 0 or not g.is_connected():
        raise ValueError("build_polygon_rep needs a connected nonempty graph")
    rep, _ = _connected_rep(g)
    polygon, order = rep.to_polygon_rep()
    assert sorted(order) == list(range(g.n))
    return polygon


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


@dataclass
class ComponentReport:
    vertices: list
    psi: int
    an: int
    pruned_leaves: int
    is_clique: bool
    is_path: bool

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "psi": self.psi,
            "an": self.an,
            "pruned_leaves": self.pruned_leaves,
            "is_clique": self.is_clique,
            "pruned_tree_is_path": self.is_path,
        }


@dataclass
class DhReport:
    psi: int
    an: int
    is_permutation: bool
    pruned_leaves: int
    witness: PolygonRep
    components: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "psi": self.psi,
            "an": self.an,
            "is_permutation": self.is_permutation,
            "pruned_leaves": self.pruned_leaves,
            "components": [c.to_json() for c in self.components],
            "witness": {
                "word": list(self.witness.diagram.word),
                "corner_gaps": list(self.witness.corners),
            },
        }


def combine_psi(values) -> int:
    """Polygon number of a disjoint union from its components' values."""
    values = list(values)
    return sum(values) - 2 * (len(values) - 1)


def dh_parameters(g: Graph) -> DhReport:
    if g.n == 0:
        raise ValueError("empty graph")
    parts = connected_components(g)
    reports, reps = [], []
    for part in parts:
        sub = g.induced(part)
        try:
            rep, pruned = _connected_rep(sub)
        except NotDistanceHereditaryError:
            raise NotDistanceHereditaryError(part) from None
        leaves = leaf_count(pruned)
        clique = sub.is_clique()
        if clique:
            psi, an = 2, 1
        else:
            psi = an = leaves
        reports.append(ComponentReport(part, psi, an, leaves, clique, pruned.is_path()))
        reps.append(rep.relabel(dict(enumerate(part))))
    witness = reps[0]
    for rep in reps[1:]:
        witness = merge_disjoint(witness, rep)
    polygon, _ = witness.to_polygon_rep()
    psi = combine_psi(r.psi for r in reports)
    return DhReport(
        psi=psi,
        an=max(r.an for r in reports),
        is_permutation=all(r.is_path for r in reports) and psi == 2,
        pruned_leaves=combine_psi(r.pruned_leaves for r in reports),
        witness=polygon,
        components=reports,
    )
