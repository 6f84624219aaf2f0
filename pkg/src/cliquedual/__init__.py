"""Clique hypergraphs, their duals, and clique dually conformal (CDC) graphs."""

from .dynamics import Trajectory, period, scan_periods, trajectory
from .errors import BudgetExceeded, CliqueDualError, NotInClassError, ParseError
from .families import FamilySpec, generate
from .graph import (
    CdcVerdict,
    Graph,
    SplitPartition,
    are_clique_duals,
    clique_dual,
    clique_hypergraph,
    complement,
    is_cdc_bruteforce,
    is_minimal_clique_transversal,
    maximal_cliques,
    minimal_clique_transversals,
    split_partition,
    substitute_graph,
)
from .hypergraph import (
    Hypergraph,
    antiblocker,
    co_occurrence_graph,
    conformalize,
    dualize,
    is_conformal,
    is_sperner,
    is_subtransversal,
    substitute_hypergraph,
)
from .isomorphism import is_isomorphic
from .recognizers import is_cdc, recognize_split_cdc, recognize_triangle_free_cdc

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CdcVerdict", "CliqueDualError", "FamilySpec", "Graph", "Hypergraph",
    "NotInClassError", "ParseError", "SplitPartition", "Trajectory", "antiblocker",
    "are_clique_duals", "clique_dual", "clique_hypergraph", "co_occurrence_graph", "complement",
    "conformalize", "dualize", "generate", "is_cdc", "is_cdc_bruteforce", "is_conformal",
    "is_isomorphic", "is_minimal_clique_transversal", "is_sperner", "is_subtransversal",
    "maximal_cliques", "minimal_clique_transversals", "period", "recognize_split_cdc",
    "recognize_triangle_free_cdc", "scan_periods", "split_partition", "substitute_graph",
    "substitute_hypergraph", "trajectory",
]
