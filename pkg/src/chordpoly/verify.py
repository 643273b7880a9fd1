"""Seeded property suites cross-checking the fast routines against oracles.

Every case is a pure function of ``(seed, size)`` so a failure can be
reproduced from the line the harness prints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import ceil
from typing import Callable

from .diagram import (
    empty_arc_flags,
    intersection_graph,
    max_series_independent,
    random_diagram,
)
from .dh import build_polygon_rep, combine_psi, dh_parameters
from .graph import (
    ORACLE_CAP,
    OracleSizeError,
    bf_alpha,
    bf_asteroidal_number,
    bf_kappa,
    disjoint_union,
    random_dh,
)
from .polygon import (
    PSI_ORACLE_CAP,
    bf_psi_r,
    kappa_peripheral,
    pierce_empty_arcs,
    psi_r,
    verify_corners,
)
from .splittree import (
    build_split_tree,
    is_split,
    join_recompose,
    leaf_count,
    prune,
)


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable[[int, int, int], bool]  # (seed, size, cap) -> ok
    default_size: int
    size_cap: Callable[[int], int]  # oracle cap -> largest allowed size


@dataclass
class SuiteResult:
    suite: str
    size: int
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)


def _psi_eq_bf(seed, n, cap):
    d = random_diagram(n, seed)
    res = psi_r(d)
    return verify_corners(d, res.corners) and res.k == bf_psi_r(d, cap)


def _psi_eq_kappa(seed, n, cap):
    d = random_diagram(n, seed)
    k = psi_r(d).k
    if intersection_graph(d).is_clique():
        return k == 2
    return k == kappa_peripheral(d, cap)


def _psi_bounds(seed, n, cap):
    d = random_diagram(n, seed)
    k = psi_r(d).k
    g = intersection_graph(d)
    ok = max_series_independent(d) <= k
    if g.is_connected():
        ok &= bf_asteroidal_number(g, cap)[0] <= k
    if not g.is_clique():
        ok &= k <= bf_kappa(g, cap)
    return ok


def _peripheral(seed, n, cap):
    d = random_diagram(n, seed)
    k = psi_r(d).k
    if k > 2 and any(a and b for a, b in empty_arc_flags(d)):
        return False
    corners = pierce_empty_arcs(d)
    return verify_corners(d, corners) and len(corners) == k


def _dh_case(seed, n):
    g, construction = random_dh(n, seed)
    return g, construction, g.is_clique()


def _dh_identity(seed, n, cap):
    g, construction, clique = _dh_case(seed, n)
    rep = build_polygon_rep(g)
    if intersection_graph(rep.diagram) != g or not rep.is_valid():
        return False
    report = dh_parameters(g)
    if clique:
        return report.psi == 2 and rep.k == 2
    leaves = leaf_count(prune(build_split_tree(construction)))
    an = bf_asteroidal_number(g, cap)[0]
    return leaves == an == rep.k == psi_r(rep.diagram).k == report.psi


def _dh_permutation(seed, n, cap):
    g, _, _ = _dh_case(seed, n)
    report = dh_parameters(g)
    at_free = bf_asteroidal_number(g, cap)[0] <= 2
    if report.is_permutation != at_free:
        return False
    return not report.is_permutation or report.witness.k == 2


def _dh_bounds(seed, n, cap):
    g, _, clique = _dh_case(seed, n)
    psi = dh_parameters(g).psi
    ok = psi <= bf_alpha(g, cap) + 1
    if g.n >= 3:
        ok &= psi <= ceil(g.n / 2)
    if not clique:
        ok &= psi <= bf_kappa(g, cap)
    return ok


def _recompose(seed, n, cap):
    g, construction = random_dh(n, seed)
    tree = build_split_tree(construction)
    tree.check()
    if join_recompose(tree) != g:
        return False
    everything = set(range(g.n))
    for m1, _ in tree.edges():
        side = tree.side_vertices(m1)
        if not is_split(g, side, everything - side):
            return False
    return True


def _disconnected(seed, n, cap):
    rng = random.Random(seed)
    parts = [
        random_dh(rng.randint(1, n), rng.randrange(1 << 30))[0]
        for _ in range(rng.choice((2, 3)))
    ]
    g = disjoint_union(*parts)
    report = dh_parameters(g)
    expected = combine_psi(dh_parameters(p).psi for p in parts)
    w = report.witness
    return (
        report.psi == expected
        and w.k == expected
        and w.is_valid()
        and intersection_graph(w.diagram) == g
    )


def _same(cap):
    return cap


SUITES = {
    s.name: s
    for s in (
        Suite("psi-eq-bf", _psi_eq_bf, 7, lambda cap: min(cap, PSI_ORACLE_CAP)),
        Suite("psi-eq-kappa", _psi_eq_kappa, 7, _same),
        Suite("psi-bounds", _psi_bounds, 7, _same),
        Suite("peripheral", _peripheral, 8, lambda cap: 10**6),
        Suite("dh-identity", _dh_identity, 10, _same),
        Suite("dh-permutation", _dh_permutation, 10, _same),
        Suite("dh-bounds", _dh_bounds, 10, _same),
        Suite("recompose", _recompose, 12, lambda cap: 10**6),
        Suite("disconnected", _disconnected, 8, lambda cap: 10**6),
    )
}


def check_size(name: str, size: int, cap: int = ORACLE_CAP) -> None:
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    limit = SUITES[name].size_cap(cap)
    if size > limit:
        raise OracleSizeError(f"suite {name}: size {size} exceeds oracle cap {limit}")


def run_suite(
    name: str,
    count: int,
    seed: int = 0,
    size: int | None = None,
    cap: int = ORACLE_CAP,
) -> SuiteResult:
    suite = SUITES[name]
    size = suite.default_size if size is None else size
    check_size(name, size, cap)
    result = SuiteResult(name, size)
    for case in range(seed, seed + count):
        if suite.check(case, size, cap):
            result.passed += 1
        else:
            result.failures.append(case)
    return result
