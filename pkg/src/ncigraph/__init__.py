"""Nearly complete intersection edge ideals: inversion test, obstruction search, Betti numbers."""

__version__ = "0.1.0"

from .betti import BettiTable, betti_sequence, betti_table, equality_polynomials, total_rank_check
from .classify import (
    ClassificationReport,
    Obstruction,
    Verdict,
    check_obstruction,
    classify,
    find_obstruction,
    is_nci_definitional,
)
from .graph import (
    Graph,
    GraphError,
    induced_subgraph,
    invert_vertex,
    is_ci_graph,
    is_connected,
    neighbors,
    spanning_trees,
)
from .ideal import (
    IdealError,
    Monomial,
    MonomialIdeal,
    UnitIdealError,
    edge_ideal,
    graph_of,
    height,
    is_complete_intersection,
    is_nci,
    minimalize,
    substitute_one,
    support,
)

__all__ = [
    "__version__",
    "BettiTable",
    "betti_sequence",
    "betti_table",
    "equality_polynomials",
    "total_rank_check",
    "ClassificationReport",
    "Obstruction",
    "Verdict",
    "check_obstruction",
    "classify",
    "find_obstruction",
    "is_nci_definitional",
    "Graph",
    "GraphError",
    "induced_subgraph",
    "invert_vertex",
    "is_ci_graph",
    "is_connected",
    "neighbors",
    "spanning_trees",
    "IdealError",
    "Monomial",
    "MonomialIdeal",
    "UnitIdealError",
    "edge_ideal",
    "graph_of",
    "height",
    "is_complete_intersection",
    "is_nci",
    "minimalize",
    "substitute_one",
    "support",
]
