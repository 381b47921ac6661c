"""The H operator, its time-filtered variant, and static baselines.

The H operator maps a multiset of non-negative integers to the largest
``i`` such that at least ``i`` elements are ``>= i`` (0 for the empty
multiset).  Composing it over neighborhoods yields the classic H-index,
its higher orders, and, in the limit, the k-core number.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .graph import StaticGraph, TemporalGraph

#: Append-only list of (time, value) pairs, as consumed by h_t_operator.
TimedValueList = Sequence[tuple[int, int]]


def h_operator(values: Iterable[int]) -> int:
    """Largest ``i`` with at least ``i`` elements ``>= i``.

    Linear time via a counting histogram: values above ``len(values)``
    cannot raise the result, so they are clamped.
    """
    vals = values if isinstance(values, (list, tuple)) else list(values)
    size = len(vals)
    if size == 0:
        return 0
    hist = [0] * (size + 1)
    for x in vals:
        if x < 0:
            raise ValueError("h_operator is defined on non-negative integers")
        hist[x if x < size else size] += 1
    at_least = 0
    for i in range(size, 0, -1):
        at_least += hist[i]
        if at_least >= i:
            return i
    return 0


def h_t_operator(entries: TimedValueList, t: int) -> int:
    """Apply :func:`h_operator` to values whose time stamp is strictly after ``t``."""
    return h_operator([x for t_entry, x in entries if t_entry > t])


# ---------------------------------------------------------------------------
# Static baselines
# ---------------------------------------------------------------------------

def _require_undirected(g: StaticGraph) -> None:
    if g.directed:
        raise ValueError("operation requires an undirected static graph; "
                         "call .undirected() first")


def static_h_index(g: StaticGraph) -> np.ndarray:
    """Per-node H-index: H over the degrees of each node's neighbors."""
    _require_undirected(g)
    degrees = [g.degree(u) for u in range(g.num_nodes)]
    out = np.zeros(g.num_nodes, dtype=np.int64)
    for u in range(g.num_nodes):
        out[u] = h_operator([degrees[v] for v in g.adj[u]])
    return out


def static_nth_order_h_index(g: StaticGraph, n: int) -> np.ndarray:
    """Per-node n-th order H-index by fixed iteration.

    Order 0 is the degree, order 1 the H-index; iteration stops early once
    two consecutive vectors are identical (the values have converged to the
    core numbers by then).
    """
    _require_undirected(g)
    if n < 0:
        raise ValueError("order must be >= 0")
    values = [g.degree(u) for u in range(g.num_nodes)]
    for _ in range(n):
        nxt = [h_operator([values[v] for v in g.adj[u]]) for u in range(g.num_nodes)]
        if nxt == values:
            break
        values = nxt
    return np.asarray(values, dtype=np.int64)


def k_core(g: StaticGraph) -> np.ndarray:
    """Per-node core numbers via bucket peeling in O(|V| + |E|).

    Peeling at level ``d`` only ever pushes neighbors into buckets ``>= d``,
    so a single ascending sweep with stale-entry skipping suffices.
    """
    _require_undirected(g)
    n = g.num_nodes
    degree = [g.degree(u) for u in range(n)]
    max_deg = max(degree, default=0)
    buckets: list[list[int]] = [[] for _ in range(max_deg + 1)]
    for u in range(n):
        buckets[degree[u]].append(u)

    core = [0] * n
    removed = [False] * n
    d = 0
    while d <= max_deg:
        bucket = buckets[d]
        if not bucket:
            d += 1
            continue
        u = bucket.pop()
        if removed[u] or degree[u] != d:
            continue  # stale entry; the live entry sits in bucket degree[u]
        removed[u] = True
        core[u] = d
        for v in g.adj[u]:
            if not removed[v] and degree[v] > d:
                degree[v] -= 1
                buckets[degree[v]].append(v)
    return np.asarray(core, dtype=np.int64)


def kh_core(g: TemporalGraph, h: int) -> np.ndarray:
    """Temporal (k, h)-core numbers.

    A neighbor counts only when the pair is joined by at least ``h``
    temporal edges (counted over both directions).  Since inducing a
    subgraph never changes pair multiplicities, the decomposition equals
    the k-core of the static graph of qualified pairs.  ``h=1`` therefore
    reduces to the k-core of the symmetrized aggregated graph.
    """
    if h < 1:
        raise ValueError("multiplicity threshold h must be >= 1")
    multiplicity: dict[tuple[int, int], int] = {}
    for e in g.edges:
        pair = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        multiplicity[pair] = multiplicity.get(pair, 0) + 1
    adj: list[set[int]] = [set() for _ in range(g.num_nodes)]
    for (u, v), count in multiplicity.items():
        if count >= h:
            adj[u].add(v)
            adj[v].add(u)
    return k_core(StaticGraph(g.num_nodes, adj, directed=False))
