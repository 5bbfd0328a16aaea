"""Lower bounds on the number of vertices of a graph from its chromatic
number and odd girth, with exact invariants to audit them."""

from .bounds import BoundId, BoundParams, BoundValue, best_bound, evaluate
from .coloring import ball_peel_coloring, peel_soundness_check
from .graph import Graph, parse_edge_list, parse_graph6, to_graph6
from .invariants import chromatic_number, essentiality, forest_essentiality

__version__ = "0.1.0"

__all__ = [
    "BoundId",
    "BoundParams",
    "BoundValue",
    "Graph",
    "ball_peel_coloring",
    "best_bound",
    "chromatic_number",
    "essentiality",
    "evaluate",
    "forest_essentiality",
    "parse_edge_list",
    "parse_graph6",
    "peel_soundness_check",
    "to_graph6",
]
