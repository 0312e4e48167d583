"""Alexander duals, Betti tables and (sequential) Cohen-Macaulayness of graph edge ideals."""

from .complex import QQ, FieldSpec, SimplicialComplex
from .graph import Graph, complete_graph, cycle_graph, path_graph
from .ideal import MonomialIdeal, alexander_dual, edge_ideal
from .resolution import BettiTable, betti_table
from .scm import Classification, classify, is_cm_graph, is_scm, is_scm_duval

__all__ = [
    "QQ",
    "BettiTable",
    "Classification",
    "FieldSpec",
    "Graph",
    "MonomialIdeal",
    "SimplicialComplex",
    "alexander_dual",
    "betti_table",
    "classify",
    "complete_graph",
    "cycle_graph",
    "edge_ideal",
    "is_cm_graph",
    "is_scm",
    "is_scm_duval",
    "path_graph",
]

__version__ = "0.1.0"
