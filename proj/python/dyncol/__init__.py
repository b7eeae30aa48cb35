"""Dynamic 3-coloring for claw-free graphs of maximum degree 3."""

from ._dyncol import *  # noqa: F401,F403
from ._dyncol import (
    ColoringError,
    Graph,
    GraphError,
    InternalInvariantError,
    NotInClassError,
    ParseError,
)

__all__ = [
    "ColoringError",
    "Graph",
    "GraphError",
    "InternalInvariantError",
    "NotInClassError",
    "ParseError",
    "chain_transfer",
    "chromatic",
    "color",
    "complete",
    "cycle",
    "decide",
    "dynamic_chromatic",
    "equivalence",
    "exceptional",
    "format_graph",
    "line_graph",
    "named",
    "parse_graph",
    "path",
    "recognize",
    "reduce",
    "triangle_graph",
    "verify",
]
