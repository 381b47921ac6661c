"""Pseudocore decompositions derived from temporal H-index tables.

The (n, k)-pseudocore is the induced temporal subgraph on the nodes whose
order-n index is at least k *in the full graph*.  Membership is decided by
the index values directly — there is no peeling loop, and a member's index
need not stay >= k within the induced subgraph.  Cores are nested both in
k (fixed n) and in n (fixed k); the latter because index values never
increase with the order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compute import hindex_table, hindex_vector, stream_eligible
from .graph import TemporalGraph
from .reachability import temporal_diameter
from .stream import HIndexTable


@dataclass
class PseudocoreDecomposition:
    """Node-to-core-number map for one order and direction."""

    n: int
    direction: str
    core_number: np.ndarray
    distinct_levels: list[int]

    def members(self, k: int) -> list[int]:
        """Nodes of the core at level ``k`` (index value >= k)."""
        return [int(v) for v in np.flatnonzero(self.core_number >= k)]

    def levels_descending(self) -> list[int]:
        """Occurring levels, highest first (rank 0 = innermost core)."""
        return sorted(self.distinct_levels, reverse=True)


def decomposition_from_values(values: np.ndarray, n: int,
                              direction: str) -> PseudocoreDecomposition:
    values = np.asarray(values, dtype=np.int64)
    levels = sorted(int(x) for x in np.unique(values))
    return PseudocoreDecomposition(n=n, direction=direction,
                                   core_number=values, distinct_levels=levels)


def decompose(h: HIndexTable, i: int) -> PseudocoreDecomposition:
    """Decomposition at order ``i`` read off a precomputed index table."""
    if not 0 <= i <= h.n:
        raise ValueError(f"order {i} out of range 0..{h.n}")
    return decomposition_from_values(h.values[:, i].copy(), i, h.direction)


def extract_core(g: TemporalGraph, d: PseudocoreDecomposition, k: int) -> TemporalGraph:
    """Induced temporal subgraph on the nodes with core number >= k.

    Keeps every edge whose both endpoints qualify, with all time stamps;
    surviving nodes are re-indexed densely and keep their labels.
    """
    keep = d.core_number >= k
    remap = np.full(g.num_nodes, -1, dtype=np.int64)
    labels = []
    for old in range(g.num_nodes):
        if keep[old]:
            remap[old] = len(labels)
            labels.append(g.labels[old])
    edges = [e._replace(u=int(remap[e.u]), v=int(remap[e.v]))
             for e in g.edges if keep[e.u] and keep[e.v]]
    return TemporalGraph(len(labels), edges, labels)


def temporal_pseudo_degeneracy(g: TemporalGraph, n: int, direction: str = "out",
                               algorithm: str = "auto") -> int:
    """Largest k with a non-empty (n, k)-pseudocore: the maximum index value."""
    values = hindex_vector(g, n, direction, algorithm)
    return int(values.max()) if values.size else 0


def order_pseudo_degeneracy(g: TemporalGraph, k: int, direction: str = "out",
                            algorithm: str = "auto") -> int:
    """Largest n with a non-empty (n, k)-pseudocore, or -1 when none exists.

    Index values vanish for orders beyond the temporal diameter, and they
    are pointwise non-increasing in the order, so an ascending scan stops
    at the first order where every node falls below k.
    """
    if k < 1:
        raise ValueError("level k must be >= 1")
    degrees = hindex_vector(g, 0, direction, algorithm)
    if degrees.size == 0 or degrees.max() < k:
        return -1
    bound = temporal_diameter(g)
    if algorithm != "recurs" and stream_eligible(g, direction):
        table = hindex_table(g, bound, direction)
        for n in range(1, bound + 1):
            if table.order(n).max() < k:
                return n - 1
        return bound
    for n in range(1, bound + 1):
        if hindex_vector(g, n, direction, "recurs").max() < k:
            return n - 1
    return bound
