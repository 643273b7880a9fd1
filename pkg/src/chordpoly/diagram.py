"""Chord diagrams as circular double-occurrence words.

Positions ``0..2n-1`` run clockwise.  Gap ``i`` sits between position ``i``
and position ``i + 1`` (mod ``2n``); corners and cut points live in gaps.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .graph import Graph


class DiagramFormatError(ValueError):
    pass


class Arc(NamedTuple):
    """Open clockwise interval from endpoint ``start`` to endpoint ``end``."""

    chord: int
    start: int
    end: int
    size: int  # 2n, the circle length

    @property
    def gap_count(self) -> int:
        return (self.end - self.start) % self.size

    @property
    def first_gap(self) -> int:
        return self.start

    @property
    def last_gap(self) -> int:
        return (self.end - 1) % self.size

    def gaps(self) -> list[int]:
        return [(self.start + i) % self.size for i in range(self.gap_count)]

    def contains_gap(self, g: int) -> bool:
        return (g - self.start) % self.size < self.gap_count

    def contains_position(self, p: int) -> bool:
        return 0 < (p - self.start) % self.size < self.gap_count


@dataclass(frozen=True)
class ChordDiagram:
    word: tuple
    ends: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        word = tuple(int(t) for t in self.word)
        object.__setattr__(self, "word", word)
        if len(word) % 2:
            raise DiagramFormatError(f"odd number of endpoints ({len(word)})")
        n = len(word) // 2
        ends: list[list[int]] = [[] for _ in range(n)]
        for pos, label in enumerate(word):
            if not 0 <= label < n:
                raise DiagramFormatError(f"label {label} outside 0..{n - 1}")
            ends[label].append(pos)
        for label, ps in enumerate(ends):
            if len(ps) != 2:
                raise DiagramFormatError(f"label {label} occurs {len(ps)} times")
        object.__setattr__(self, "ends", tuple(tuple(ps) for ps in ends))

    @property
    def n(self) -> int:
        return len(self.ends)

    @property
    def size(self) -> int:
        return len(self.word)

    def partner(self, pos: int) -> int:
        p, q = self.ends[self.word[pos]]
        return q if pos == p else p

    def arcs(self, c: int) -> tuple[Arc, Arc]:
        p, q = self.ends[c]
        return Arc(c, p, q, self.size), Arc(c, q, p, self.size)

    def all_arcs(self) -> list[Arc]:
        return [a for c in range(self.n) for a in self.arcs(c)]

    def crosses(self, a: int, b: int) -> bool:
        p, q = self.ends[a]
        r, s = self.ends[b]
        return (p < r < q) != (p < s < q)

    def rotate(self, offset: int) -> ChordDiagram:
        if not self.word:
            return self
        k = offset % self.size
        return ChordDiagram(self.word[k:] + self.word[:k])

    def to_text(self) -> str:
        return " ".join(map(str, self.word))

    def __str__(self) -> str:
        return self.to_text()


def parse_diagram(text) -> ChordDiagram:
    """Build a diagram from whitespace-separated tokens (or a token list).

    Labels are renumbered ``0..n-1`` in order of first occurrence.
    """
    tokens = text.split() if isinstance(text, str) else [str(t) for t in text]
    if len(tokens) % 2:
        raise DiagramFormatError(f"odd number of tokens ({len(tokens)})")
    counts = Counter(tokens)
    for token in tokens:
        if counts[token] != 2:
            raise DiagramFormatError(
                f"token {token!r} occurs {counts[token]} times, expected 2"
            )
    index: dict[str, int] = {}
    for token in tokens:
        index.setdefault(token, len(index))
    return ChordDiagram(tuple(index[t] for t in tokens))


def intersection_graph(d: ChordDiagram) -> Graph:
    """Chords are adjacent iff their endpoints interleave.

    Sweep with a stack of open chords: when a chord closes, every chord
    opened after it and still open crosses it.
    """
    edges = []
    open_at: dict[int, int] = {}
    stack: list[int] = []
    for pos, c in enumerate(d.word):
        if c not in open_at:
            open_at[c] = len(stack)
            stack.append(c)
            continue
        i = open_at.pop(c)
        crossing = stack[i + 1:]
        edges += [(c, o) for o in crossing]
        del stack[i]
        for j in range(i, len(stack)):
            open_at[stack[j]] = j
    return Graph.from_edges(d.n, edges)


def empty_arc_flags(d: ChordDiagram) -> list[tuple[bool, bool]]:
    """Per chord, whether its inner arc ``(p, q)`` and outer arc ``(q, p)`` are empty.

    Linear time: the inner arc holds a whole chord iff some chord opens after
    ``p`` and closes before ``q``; the outer arc iff some chord lies entirely
    before ``p``, entirely after ``q``, or straddles both.
    """
    size = d.size
    INF = size + 1
    # min right end among chords whose left end is > position
    min_right_after = [INF] * (size + 1)
    for pos in range(size - 1, -1, -1):
        best = min_right_after[pos + 1]
        p, q = d.ends[d.word[pos]]
        if pos == p:
            best = min(best, q)
        min_right_after[pos] = best
    # max right end among chords whose left end is < position
    max_right_before = [-1] * (size + 1)
    for pos in range(size):
        best = max_right_before[pos]
        p, q = d.ends[d.word[pos]]
        if pos == p:
            best = max(best, q)
        max_right_before[pos + 1] = best
    first_close = min((q for _, q in d.ends), default=INF)
    last_open = max((p for p, _ in d.ends), default=-1)

    flags = []
    for p, q in d.ends:
        inner = min_right_after[p + 1] >= q
        outer = not (
            first_close < p or last_open > q or max_right_before[p] > q
        )
        flags.append((inner, outer))
    return flags


def peripheral_chords(d: ChordDiagram) -> tuple[set[int], dict[int, list[Arc]]]:
    """Chords with at least one empty arc, and every chord's empty arcs."""
    empty: dict[int, list[Arc]] = {}
    for c, (inner, outer) in enumerate(empty_arc_flags(d)):
        a_in, a_out = d.arcs(c)
        empty[c] = [a for a, ok in ((a_in, inner), (a_out, outer)) if ok]
    return {c for c, arcs in empty.items() if arcs}, empty


def arc_is_empty(d: ChordDiagram, arc: Arc) -> bool:
    """Direct check: no chord has both endpoints inside ``arc``."""
    return not any(
        arc.contains_position(p) and arc.contains_position(q) for p, q in d.ends
    )


def max_series_independent(d: ChordDiagram) -> int:
    """Largest chain of chords met one after another from some cut gap.

    For each cut, chords become intervals of the linearised word and the
    answer is the classic maximum set of disjoint intervals (earliest end
    first).
    """
    if d.n == 0:
        return 0
    size = d.size
    best = 0
    for cut in range(size):
        # linear coordinate of position x after cutting just behind gap `cut`
        start = (cut + 1) % size
        last_end = -1
        count = 0
        for offset in range(size):
            pos = (start + offset) % size
            other = d.partner(pos)
            other_offset = (other - start) % size
            if other_offset > offset:
                continue  # `pos` opens its chord
            if other_offset > last_end:
                count += 1
                last_end = offset
        best = max(best, count)
    return best


def bf_max_series_independent(d: ChordDiagram) -> int:
    """Subset enumeration over chords and cut gaps (oracle)."""
    size = d.size
    best = 0
    for cut in range(size):
        start = (cut + 1) % size
        spans = [
            tuple(sorted(((p - start) % size, (q - start) % size))) for p, q in d.ends
        ]
        for k in range(best + 1, d.n + 1):
            found = False
            for subset in combinations(range(d.n), k):
                ivs = sorted(spans[c] for c in subset)
                if all(ivs[i][1] < ivs[i + 1][0] for i in range(k - 1)):
                    found = True
                    break
            if not found:
                break
            best = k
    return best


def canonical_cycle(n: int) -> ChordDiagram:
    """Diagram of ``C_n``: chord ``i`` at positions ``2i`` and ``2i + 3``."""
    if n < 3:
        raise ValueError("cycles need at least 3 chords")
    word = [0] * (2 * n)
    for i in range(n):
        word[2 * i] = i
        word[(2 * i + 3) % (2 * n)] = i
    return ChordDiagram(tuple(word))


def random_diagram(n: int, seed: int) -> ChordDiagram:
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    word = [c for c in range(n) for _ in range(2)]
    rng.shuffle(word)
    return ChordDiagram(tuple(word))
