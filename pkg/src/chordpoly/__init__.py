"""Polygon numbers of circle graphs: exact per-representation values and the
distance hereditary case via split decompositions."""

from .diagram import ChordDiagram, canonical_cycle, intersection_graph, parse_diagram
from .dh import DhReport, build_polygon_rep, dh_parameters
from .graph import Graph, parse_graph, recognize_dh
from .polygon import PolygonRep, psi_r, verify_corners
from .splittree import SplitTree, build_split_tree, leaf_count, prune

__all__ = [
    "ChordDiagram",
    "DhReport",
    "Graph",
    "PolygonRep",
    "SplitTree",
    "build_polygon_rep",
    "build_split_tree",
    "canonical_cycle",
    "dh_parameters",
    "intersection_graph",
    "leaf_count",
    "parse_diagram",
    "parse_graph",
    "prune",
    "psi_r",
    "recognize_dh",
    "verify_corners",
]
