"""Command-line front end: ``chordpoly psi-rep | analyze | verify | split-tree``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .diagram import DiagramFormatError, empty_arc_flags, parse_diagram
from .dh import NotDistanceHereditaryError, dh_parameters
from .graph import ORACLE_CAP, GraphFormatError, OracleSizeError, parse_graph, recognize_dh
from .polygon import pierce_empty_arcs, psi_r, verify_corners
from .splittree import build_split_tree, prune, to_dot
from .verify import SUITES, check_size, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_REJECTED = 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    source: str | None = None
    inline: str | None = None
    seed: int = 0
    count: int = 100
    cap: int = ORACLE_CAP
    output: str = "text"

    def __post_init__(self):
        if self.cap < 1:
            raise InputError("oracle cap must be positive")
        if self.count < 0:
            raise InputError("count must be nonnegative")

    def read_input(self) -> str:
        if self.inline is not None:
            return self.inline
        if self.source is None:
            raise InputError("give an input file or --inline")
        try:
            return Path(self.source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {self.source}: {exc.strerror}") from None


def cmd_psi_rep(cfg: RunConfig) -> int:
    try:
        d = parse_diagram(cfg.read_input())
    except DiagramFormatError as exc:
        raise InputError(str(exc)) from None
    if d.n == 0:
        raise InputError("diagram has no chords")
    res = psi_r(d)
    flags = empty_arc_flags(d)
    peripheral = [c for c, (a, b) in enumerate(flags) if a or b]
    checks = {
        "corners_satisfy": verify_corners(d, res.corners),
        "peripheral_corners_suffice": len(pierce_empty_arcs(d)) == res.k,
        "nonempty_arc_when_above_two": res.k == 2 or not any(a and b for a, b in flags),
    }
    if cfg.output == "json":
        print(json.dumps({
            "k": res.k,
            "corner_gaps": list(res.corners),
            "peripheral": peripheral,
            "checks": checks,
        }))
    else:
        print(f"k={res.k} corners={list(res.corners)}")
        print(f"peripheral={peripheral}")
    return EXIT_OK if all(checks.values()) else EXIT_FAILURE


def _read_graph(cfg: RunConfig):
    try:
        g = parse_graph(cfg.read_input())
    except GraphFormatError as exc:
        raise InputError(str(exc)) from None
    if g.n == 0:
        raise InputError("graph has no vertices")
    return g


def cmd_analyze(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    try:
        report = dh_parameters(g)
    except NotDistanceHereditaryError as exc:
        print(f"not distance hereditary: component {exc.component}", file=sys.stderr)
        return EXIT_REJECTED
    if cfg.output == "json":
        print(json.dumps(report.to_json()))
        return EXIT_OK
    perm = "true" if report.is_permutation else "false"
    print(f"psi={report.psi} an={report.an} permutation={perm}")
    print(f"witness={' '.join(map(str, report.witness.diagram.word))}")
    print(f"corners={list(report.witness.corners)}")
    return EXIT_OK


def cmd_split_tree(cfg: RunConfig, pruned: bool) -> int:
    g = _read_graph(cfg)
    if not g.is_connected():
        raise InputError("split-tree needs a connected graph")
    construction = recognize_dh(g)
    if construction is None:
        print("not distance hereditary", file=sys.stderr)
        return EXIT_REJECTED
    tree = build_split_tree(construction)
    if pruned:
        tree = prune(tree)
    sys.stdout.write(to_dot(tree, "pruned_split_tree" if pruned else "split_tree"))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str, size: int | None) -> int:
    names = list(SUITES) if suite == "all" else [suite]
    try:
        for name in names:
            check_size(name, SUITES[name].default_size if size is None else size, cfg.cap)
    except (OracleSizeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if cfg.count == 0:
        print("0 cases, ok")
        return EXIT_OK
    status = EXIT_OK
    for name in names:
        result = run_suite(name, cfg.count, cfg.seed, size, cfg.cap)
        label = f"{name}: " if len(names) > 1 else ""
        verdict = "ok" if not result.failures else "FAILED"
        print(f"{label}{result.passed}/{result.total} {verdict}")
        for case in result.failures:
            print(f"  reproduce: --suite {name} --seed {case} --n {result.size} --count 1")
            status = EXIT_FAILURE
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordpoly",
        description="Polygon numbers of chord diagrams and distance hereditary graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("path", nargs="?", help="input file")
        p.add_argument("--inline", help="input text instead of a file")

    p = sub.add_parser("psi-rep", help="polygon number of a fixed chord diagram")
    with_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="polygon and asteroidal numbers of a DH graph")
    with_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("split-tree", help="split decomposition of a DH graph as DOT")
    with_input(p)
    p.add_argument("--pruned", action="store_true", help="emit the pruned tree")

    p = sub.add_parser("verify", help="run seeded property suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--n", type=int, default=None, help="case size (default per suite)")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=ORACLE_CAP, help="oracle size cap")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = RunConfig(
            subcommand=args.command,
            source=getattr(args, "path", None),
            inline=getattr(args, "inline", None),
            seed=getattr(args, "seed", 0),
            count=getattr(args, "count", 0),
            cap=getattr(args, "cap", ORACLE_CAP),
            output=getattr(args, "format", "dot" if args.command == "split-tree" else "text"),
        )
        if args.command == "psi-rep":
            return cmd_psi_rep(cfg)
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "split-tree":
            return cmd_split_tree(cfg, args.pruned)
        return cmd_verify(cfg, args.suite, args.n)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
