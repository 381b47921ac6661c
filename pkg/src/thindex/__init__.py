"""Temporal H-index centrality and pseudocore analytics for temporal networks.

The package computes, for every node of a temporal network, the n-th order
temporal H-index in both directions (outward: spreading ability, inward:
receivability) with two interchangeable engines, derives pseudocore
decompositions from the values, and evaluates them with reachability
scores, spreading simulations, and rank correlations.
"""

from .compute import hindex_table, hindex_vector, stream_eligible
from .errors import (DegenerateRankingError, EdgeListParseError,
                     InvalidIntervalError, ThindexError, TreeBudgetError,
                     UndefinedScoreError, UnsupportedInputError)
from .evaluation import (SirParams, heuristic_rankings, kendall_tau_b,
                         sir_ranking, sir_simulate)
from .graph import (INFINITY, GraphStats, StaticGraph, TemporalEdge,
                    TemporalGraph, aggregate, in_degree_at, load_edge_stream,
                    loads_edge_stream, out_degree_at, remove_isolated_nodes,
                    restrict_interval, temporal_neighborhood,
                    temporal_transpose)
from .hops import (h_operator, h_t_operator, k_core, kh_core, static_h_index,
                   static_nth_order_h_index)
from .pseudocore import (PseudocoreDecomposition, decompose,
                         decomposition_from_values, extract_core,
                         order_pseudo_degeneracy, temporal_pseudo_degeneracy)
from .reachability import (ReachabilityTree, build_reachability_tree,
                           descendant_count, earliest_arrivals, phi,
                           reach_scores, reaches, temporal_diameter)
from .recurs import recurs_compute
from .stream import HIndexTable, stream_compute, stream_compute_inward

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "DegenerateRankingError",
    "EdgeListParseError",
    "GraphStats",
    "HIndexTable",
    "InvalidIntervalError",
    "PseudocoreDecomposition",
    "ReachabilityTree",
    "SirParams",
    "StaticGraph",
    "TemporalEdge",
    "TemporalGraph",
    "ThindexError",
    "TreeBudgetError",
    "UndefinedScoreError",
    "UnsupportedInputError",
    "aggregate",
    "build_reachability_tree",
    "decompose",
    "decomposition_from_values",
    "descendant_count",
    "earliest_arrivals",
    "extract_core",
    "h_operator",
    "h_t_operator",
    "heuristic_rankings",
    "hindex_table",
    "hindex_vector",
    "in_degree_at",
    "k_core",
    "kendall_tau_b",
    "kh_core",
    "load_edge_stream",
    "loads_edge_stream",
    "order_pseudo_degeneracy",
    "out_degree_at",
    "phi",
    "reach_scores",
    "reaches",
    "recurs_compute",
    "remove_isolated_nodes",
    "restrict_interval",
    "sir_ranking",
    "sir_simulate",
    "static_h_index",
    "static_nth_order_h_index",
    "stream_compute",
    "stream_compute_inward",
    "stream_eligible",
    "temporal_diameter",
    "temporal_neighborhood",
    "temporal_pseudo_degeneracy",
    "temporal_transpose",
]
