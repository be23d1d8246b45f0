"""Maximum-leaf spanning trees: greedy 2-approximation, certificates, exact oracle."""

from ._core import (
    BudgetExceeded,
    Graph,
    GraphError,
    InvariantViolation,
    NotConnectedError,
    ParseError,
    certify,
    compare,
    generate,
    is_connected,
    max_leaf_exact,
    parse_graph,
    serialize_graph,
    solve,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphError",
    "InvariantViolation",
    "NotConnectedError",
    "ParseError",
    "certify",
    "compare",
    "generate",
    "is_connected",
    "max_leaf_exact",
    "parse_graph",
    "serialize_graph",
    "solve",
]
