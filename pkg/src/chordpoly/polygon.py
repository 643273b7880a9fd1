"""Polygon number of a fixed chord diagram.

A corner set satisfies a diagram when every arc of every chord contains a
corner gap, so the polygon number of a representation is the minimum
number of gaps piercing all ``2n`` arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .diagram import Arc, ChordDiagram, empty_arc_flags, intersection_graph
from .graph import OracleSizeError, bf_kappa

PSI_ORACLE_CAP = 8


class CornerError(ValueError):
    pass


class CliqueError(ValueError):
    pass


class PsiResult(NamedTuple):
    k: int
    corners: tuple


@dataclass(frozen=True)
class PolygonRep:
    diagram: ChordDiagram
    corners: tuple

    def __post_init__(self):
        object.__setattr__(self, "corners", corner_set(self.diagram, self.corners))

    @property
    def k(self) -> int:
        return len(self.corners)

    def is_valid(self) -> bool:
        return verify_corners(self.diagram, self.corners)


def corner_set(d: ChordDiagram, gaps) -> tuple:
    gaps = tuple(sorted(set(int(g) for g in gaps)))
    for g in gaps:
        if not 0 <= g < d.size:
            raise CornerError(f"gap {g} outside 0..{d.size - 1}")
    return gaps


def _satisfies_per_chord(d: ChordDiagram, gaps: tuple) -> bool:
    # prefix[i] = number of corners in gaps 0..i-1
    size = d.size
    marked = [0] * size
    for g in gaps:
        marked[g] = 1
    prefix = [0]
    for m in marked:
        prefix.append(prefix[-1] + m)
    total = prefix[-1]
    for p, q in d.ends:
        inner = prefix[q] - prefix[p]  # gaps p..q-1
        if inner == 0 or inner == total:
            return False
    return True


def _satisfies_by_sides(d: ChordDiagram, gaps: tuple) -> bool:
    """Every stretch of endpoints between cyclically consecutive corners is empty."""
    side = [0] * d.size
    current = len(gaps) - 1  # positions before the first corner wrap to the last side
    it = 0
    for pos in range(d.size):
        side[pos] = current
        while it < len(gaps) and gaps[it] == pos:
            current = it
            it += 1
    return all(side[p] != side[q] for p, q in d.ends)


def verify_corners(d: ChordDiagram, gaps) -> bool:
    """True iff every chord has a corner gap in each of its two arcs.

    The side-emptiness formulation is evaluated as well and must agree.
    """
    gaps = corner_set(d, gaps)
    per_chord = _satisfies_per_chord(d, gaps)
    by_sides = _satisfies_by_sides(d, gaps)
    assert per_chord == by_sides, f"corner checks disagree on {d} / {gaps}"
    return per_chord


def pierce_arcs(arcs: list[Arc], size: int) -> tuple:
    """Minimum set of gaps hitting every arc of ``arcs`` on a circle of ``size`` gaps.

    Every solution hits a shortest arc, so try each of its gaps as the first
    point, cut the circle there and finish with the rightmost-point greedy
    on the remaining (now linear) intervals.
    """
    if not arcs:
        return ()
    shortest = min(arcs, key=lambda a: (a.gap_count, a.start))
    # bucket arcs by last gap; rotating the bucket order gives the sort by
    # right end in every cut coordinate system
    by_last: list[list[Arc]] = [[] for _ in range(size)]
    for a in arcs:
        by_last[a.last_gap].append(a)

    best: list[int] | None = None
    for first in shortest.gaps():
        chosen = [first]
        last = 0  # linear coordinate of the latest point; `first` sits at 0
        for shift in range(1, size):
            g = (first + shift) % size
            for a in by_last[g]:
                lo = (a.start - first) % size
                if lo == 0 or lo > shift:
                    continue  # wraps through `first`, already pierced
                if lo > last:
                    chosen.append(g)
                    last = shift
                    break
            if best is not None and len(chosen) >= len(best):
                break
        if best is None or len(chosen) < len(best):
            best = chosen
    return tuple(sorted(best))


def psi_r(d: ChordDiagram) -> PsiResult:
    """Polygon number of the representation together with witness corners."""
    if d.n == 0:
        raise ValueError("empty diagram has no polygon number")
    flags = empty_arc_flags(d)
    for c, (inner, outer) in enumerate(flags):
        if inner and outer:
            p, q = d.ends[c]
            return PsiResult(2, (p, q))
    corners = pierce_arcs(d.all_arcs(), d.size)
    return PsiResult(len(corners), corners)


def bf_psi_r(d: ChordDiagram, cap: int | None = None) -> int:
    """Smallest corner set found by trying gap subsets in order of size."""
    cap = PSI_ORACLE_CAP if cap is None else cap
    if d.n > cap:
        raise OracleSizeError(f"diagram has {d.n} chords, oracle cap is {cap}")
    if d.n == 0:
        raise ValueError("empty diagram has no polygon number")
    for k in range(1, d.size + 1):
        for gaps in combinations(range(d.size), k):
            if verify_corners(d, gaps):
                return k
    raise AssertionError("all gaps together always satisfy a diagram")


def peripheral_graph(d: ChordDiagram):
    """Intersection graph of the peripheral chords, plus their labels."""
    labels = [c for c, (a, b) in enumerate(empty_arc_flags(d)) if a or b]
    return intersection_graph(d).induced(labels), labels


def kappa_peripheral(d: ChordDiagram, cap: int | None = None) -> int:
    g = intersection_graph(d)
    if g.is_clique():
        raise CliqueError("intersection graph is a clique")
    sub, _ = peripheral_graph(d)
    return bf_kappa(sub, cap)


def pierce_empty_arcs(d: ChordDiagram) -> tuple:
    """Minimum piercing of the peripheral chords' empty arcs only."""
    arcs = []
    for c, flags in enumerate(empty_arc_flags(d)):
        arcs += [a for a, ok in zip(d.arcs(c), flags) if ok]
    return pierce_arcs(arcs, d.size)
