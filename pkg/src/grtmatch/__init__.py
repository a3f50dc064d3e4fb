"""Clique counts in graphs whose edges admit a colouring with bounded
matching number in every colour."""

from .colouring import (
    ColouredGraph,
    CliqueHypergraph,
    HyperEdge,
    clique_hypergraph,
    is_hyperforest,
    leaves,
    mns,
    nu_vector,
    predicates,
    uncolour,
)
from .compressions import ad_complete, ca_transfer, cad_complete, d_isolate, d_merge
from .errors import BudgetExceeded, PreconditionError
from .formulas import (
    MatchingProfile,
    asymptotics,
    clique_cone_graph,
    dense_construction,
    grt,
    phi,
    sparse_construction,
)
from .graph import GEDecomposition, Graph, count_cliques, ge_decompose, matching_number, max_matching
from .oracle import brute_ge, brute_grt, brute_nu, brute_sigma_maximal, ramsey_search
from .pipeline import decycle, dissolve, distil, peel, recolour, verify_trace
from .sigma import SigmaProblem, sigma_maximal, sigma_value

__version__ = "0.1.0"

__all__ = [
    "ad_complete",
    "asymptotics",
    "brute_ge",
    "brute_grt",
    "brute_nu",
    "brute_sigma_maximal",
    "BudgetExceeded",
    "ca_transfer",
    "cad_complete",
    "clique_cone_graph",
    "clique_hypergraph",
    "CliqueHypergraph",
    "ColouredGraph",
    "count_cliques",
    "d_isolate",
    "d_merge",
    "decycle",
    "dense_construction",
    "dissolve",
    "distil",
    "ge_decompose",
    "GEDecomposition",
    "Graph",
    "grt",
    "HyperEdge",
    "is_hyperforest",
    "leaves",
    "matching_number",
    "MatchingProfile",
    "max_matching",
    "mns",
    "nu_vector",
    "peel",
    "phi",
    "PreconditionError",
    "predicates",
    "ramsey_search",
    "recolour",
    "sigma_maximal",
    "sigma_value",
    "SigmaProblem",
    "sparse_construction",
    "uncolour",
    "verify_trace",
]
