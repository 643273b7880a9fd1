"""Simple undirected graphs, distance hereditary recognition and brute-force oracles."""

from __future__ import annotations

import random
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

ORACLE_CAP = 16

START = "start"
PENDANT = "pendant"
TRUE_TWIN = "true-twin"
FALSE_TWIN = "false-twin"
STEP_KINDS = (PENDANT, TRUE_TWIN, FALSE_TWIN)


class GraphFormatError(ValueError):
    pass


class OracleSizeError(ValueError):
    pass


class NotConnectedError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs; ``adj`` is derived and never mutated.
    """

    n: int
    edges: frozenset = frozenset()
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = set()
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
            a, b = (u, v) if u < v else (v, u)
            edges.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, vertices) -> Graph:
        """Induced subgraph; vertex ``i`` of the result is ``vertices[i]``."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adj[u]
            if v in index and u < v
        ]
        return Graph.from_edges(len(vertices), edges)

    def is_clique(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def masks(self) -> list[int]:
        """Neighbourhoods as bitmasks, for the exhaustive oracles."""
        return [sum(1 << w for w in self.adj[v]) for v in range(self.n)]

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Read the ``n m`` header followed by ``m`` lines of ``u v``."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(values) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        rows.append((lineno, values))
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    (_, (n, m)), body = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise GraphFormatError("negative vertex or edge count")
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = set()
    for lineno, (u, v) in body:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u}-{v}")
        edges.add(key)
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# small named graphs used throughout the tests and the CLI docs
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivided_claw() -> Graph:
    """Centre 0, middle vertices 1..3, leaves 4..6."""
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------------------
# components and oracles
# ---------------------------------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            part.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        parts.append(sorted(part))
    return parts


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = ORACLE_CAP if cap is None else cap
    if g.n > cap:
        raise OracleSizeError(f"graph has {g.n} vertices, oracle cap is {cap}")


def bf_alpha(g: Graph, cap: int | None = None) -> int:
    """Maximum independent set size by trying subsets from largest to smallest."""
    _check_cap(g, cap)
    masks = g.masks()
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            chosen = sum(1 << v for v in subset)
            if all(masks[v] & chosen == 0 for v in subset):
                return size
    return 0


def _partition_into_cliques(masks: list[int], order: list[int], k: int) -> bool:
    n = len(order)
    blocks: list[int] = []

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for b in range(len(blocks)):
            if blocks[b] & ~masks[v] == 0:
                blocks[b] |= 1 << v
                if place(i + 1):
                    return True
                blocks[b] &= ~(1 << v)
        if len(blocks) < k:
            blocks.append(1 << v)
            if place(i + 1):
                return True
            blocks.pop()
        return False

    return place(0)


def bf_kappa(g: Graph, cap: int | None = None) -> int:
    """Minimum clique partition size, searching upward from ``alpha``."""
    _check_cap(g, cap)
    if g.n == 0:
        return 0
    masks = g.masks()
    order = sorted(range(g.n), key=lambda v: -len(g.adj[v]))
    for k in range(bf_alpha(g, cap), g.n + 1):
        if _partition_into_cliques(masks, order, k):
            return k
    raise AssertionError("unreachable: singletons always partition V")


def _component_labels(g: Graph, removed: set[int]) -> list[int]:
    label = [-1] * g.n
    current = 0
    for s in range(g.n):
        if s in removed or label[s] >= 0:
            continue
        label[s] = current
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w not in removed and label[w] < 0:
                    label[w] = current
                    queue.append(w)
        current += 1
    return label


def is_asteroidal(g: Graph, subset) -> bool:
    """True iff, for every ``a`` in the set, the rest avoids ``N[a]`` and lies
    in a single component of ``G - N[a]``."""
    subset = list(subset)
    for a in subset:
        label = _component_labels(g, set(g.adj[a]) | {a})
        seen = {label[x] for x in subset if x != a}
        if -1 in seen or len(seen) > 1:
            return False
    return True


def _bf_asteroidal_connected(g: Graph) -> tuple[int, tuple]:
    if g.n == 0:
        return 0, ()
    comp = [_component_labels(g, set(g.adj[a]) | {a}) for a in range(g.n)]

    def ok(subset) -> bool:
        for a in subset:
            seen = {comp[a][x] for x in subset if x != a}
            if -1 in seen or len(seen) > 1:
                return False
        return True

    # asteroidal sets are closed under taking subsets, so grow level by level
    level = [(v,) for v in range(g.n)]
    best = level[0]
    while level:
        best = level[0]
        grown = []
        for subset in level:
            for v in range(subset[-1] + 1, g.n):
                candidate = subset + (v,)
                if ok(candidate):
                    grown.append(candidate)
        level = grown
    return len(best), best


def bf_asteroidal_number(g: Graph, cap: int | None = None) -> tuple[int, tuple]:
    """Asteroidal number and one maximum asteroidal set.

    Disconnected graphs report the maximum over their components.
    """
    _check_cap(g, cap)
    best: tuple[int, tuple] = (0, ())
    for part in connected_components(g):
        size, witness = _bf_asteroidal_connected(g.induced(part))
        if size > best[0]:
            best = (size, tuple(part[i] for i in witness))
    return best


# ---------------------------------------------------------------------------
# distance hereditary constructions
# ---------------------------------------------------------------------------


class Step(NamedTuple):
    kind: str
    vertex: int
    target: int | None = None


@dataclass(frozen=True)
class DhConstruction:
    """One-vertex start followed by pendant / twin additions."""

    steps: tuple

    def __post_init__(self):
        steps = tuple(Step(*s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if steps and steps[0].kind != START:
            raise ValueError("construction must begin with a start step")
        created = set()
        for i, step in enumerate(steps):
            if i and step.kind not in STEP_KINDS:
                raise ValueError(f"step {i}: unknown kind {step.kind!r}")
            if i and step.target not in created:
                raise ValueError(f"step {i}: target {step.target} not created yet")
            if i == 1 and step.kind == FALSE_TWIN:
                raise ValueError("a false twin of a lone vertex disconnects the graph")
            if step.vertex in created:
                raise ValueError(f"step {i}: vertex {step.vertex} created twice")
            created.add(step.vertex)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def vertices(self) -> list[int]:
        return [s.vertex for s in self.steps]

    def replay(self) -> Graph:
        """Rebuild the graph; vertex labels must be exactly ``0..len-1``."""
        n = len(self.steps)
        if sorted(self.vertices) != list(range(n)):
            raise ValueError("construction labels are not 0..n-1")
        adj: list[set[int]] = [set() for _ in range(n)]
        for step in self.steps[1:]:
            v, t = step.vertex, step.target
            if step.kind == PENDANT:
                new = {t}
            elif step.kind == TRUE_TWIN:
                new = adj[t] | {t}
            else:
                new = set(adj[t])
            adj[v] = new
            for w in new:
                adj[w].add(v)
        return Graph.from_edges(n, ((u, w) for u in range(n) for w in adj[u] if u < w))


def recognize_dh(g: Graph) -> DhConstruction | None:
    """Eliminate pendants and twins; ``None`` means ``g`` is not distance hereditary.

    Preference order is pendant, true twin, false twin, smallest ids first.
    The returned construction replays the elimination backwards.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise NotConnectedError("recognize_dh needs a connected graph")
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    removed: list[Step] = []
    while len(adj) > 1:
        step = _next_elimination(adj)
        if step is None:
            return None
        v = step.vertex
        for w in adj.pop(v):
            adj[w].discard(v)
        removed.append(step)
    (last,) = adj
    return DhConstruction((Step(START, last),) + tuple(reversed(removed)))


def _next_elimination(adj: dict[int, set[int]]) -> Step | None:
    if len(adj) == 2:
        # an edge is both a pendant and a true twin pair; K_n reads as twins
        keep, drop = sorted(adj)
        return Step(TRUE_TWIN, drop, keep)
    for v in sorted(adj):
        if len(adj[v]) == 1:
            (t,) = adj[v]
            return Step(PENDANT, v, t)
    for kind in (TRUE_TWIN, FALSE_TWIN):
        groups = defaultdict(list)
        for v in sorted(adj):
            key = adj[v] | {v} if kind == TRUE_TWIN else adj[v]
            groups[frozenset(key)].append(v)
        pairs = [tuple(vs[:2]) for vs in groups.values() if len(vs) > 1]
        if pairs:
            keep, drop = min(pairs)
            return Step(kind, drop, keep)
    return None


def random_dh_construction(n: int, seed: int) -> DhConstruction:
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    steps = [Step(START, 0)]
    for v in range(1, n):
        # the first vertex has no neighbours to share with a false twin
        kinds = STEP_KINDS if v > 1 else (PENDANT, TRUE_TWIN)
        steps.append(Step(rng.choice(kinds), v, rng.randrange(v)))
    return DhConstruction(tuple(steps))


def random_dh(n: int, seed: int) -> tuple[Graph, DhConstruction]:
    construction = random_dh_construction(n, seed)
    return construction.replay(), construction
