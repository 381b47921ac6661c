"""Temporal graph data model and time-dependent degree queries.

A temporal network is held as a chronologically sorted stream of directed
temporal edges ``(u, v, t, lam)``: the edge leaves ``u`` at availability
time ``t`` and arrives at ``v`` at time ``t + lam``.  Undirected input is
expanded into two symmetric directed edges at load time.  Node labels from
input files are mapped to dense integer ids; all per-node state in the
engines is indexed by these ids.
"""

from __future__ import annotations

import io
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import EdgeListParseError, InvalidIntervalError

#: Sentinel for "infinitely late": the largest supported time value.
INFINITY = 2**63 - 1

_COMMENT_PREFIXES = ("#", "%")


class TemporalEdge(NamedTuple):
    """Directed temporal edge: available at ``t``, traversed in ``lam`` units."""

    u: int
    v: int
    t: int
    lam: int = 1

    @property
    def arrival(self) -> int:
        return self.t + self.lam


@dataclass(frozen=True)
class GraphStats:
    node_count: int
    edge_count: int
    distinct_times: int
    max_out_degree: int
    max_in_degree: int
    avg_out_degree: float


class TemporalGraph:
    """Immutable container for a temporal edge stream.

    Edges are kept sorted by availability time; edges with equal time keep
    their input order, so repeated runs over the same input are
    reproducible.  Instances are safe to share between concurrent readers.
    """

    def __init__(self, num_nodes: int, edges: Iterable[TemporalEdge],
                 labels: Sequence[str] | None = None):
        edges = [TemporalEdge(*e) for e in edges]
        for e in edges:
            if e.u == e.v:
                raise ValueError(f"self-loop on node {e.u}")
            if e.lam < 1:
                raise ValueError(f"transition time must be >= 1, got {e.lam}")
            if e.t < 0:
                raise ValueError(f"availability time must be >= 0, got {e.t}")
            if not (0 <= e.u < num_nodes and 0 <= e.v < num_nodes):
                raise ValueError(f"edge {e} references a node >= {num_nodes}")
        edges.sort(key=lambda e: e.t)  # stable: ties keep input order
        self.num_nodes = num_nodes
        self.edges: list[TemporalEdge] = edges
        if labels is None:
            labels = [str(i) for i in range(num_nodes)]
        if len(labels) != num_nodes:
            raise ValueError("one label per node required")
        self.labels = list(labels)
        self.uniform_lambda = len({e.lam for e in edges}) <= 1

    # -- basic queries ------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def node_id(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def out_times(self) -> list[list[int]]:
        """Per node, the sorted availability times of its out-edges."""
        times: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for e in self.edges:  # edges already time-sorted
            times[e.u].append(e.t)
        return times

    @cached_property
    def in_arrivals(self) -> list[list[int]]:
        """Per node, the sorted arrival times of its in-edges."""
        arrivals: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for e in self.edges:
            arrivals[e.v].append(e.arrival)
        for lst in arrivals:
            lst.sort()
        return arrivals

    @cached_property
    def out_adj(self) -> list[list[TemporalEdge]]:
        """Per node, its out-edges sorted by availability time."""
        adj: list[list[TemporalEdge]] = [[] for _ in range(self.num_nodes)]
        for e in self.edges:
            adj[e.u].append(e)
        return adj

    @cached_property
    def in_adj(self) -> list[list[TemporalEdge]]:
        """Per node, its in-edges sorted by arrival time."""
        adj: list[list[TemporalEdge]] = [[] for _ in range(self.num_nodes)]
        for e in self.edges:
            adj[e.v].append(e)
        for lst in adj:
            lst.sort(key=lambda e: e.arrival)
        return adj

    def stats(self) -> GraphStats:
        out_deg = [len(ts) for ts in self.out_times]
        in_deg = [len(ts) for ts in self.in_arrivals]
        n = self.num_nodes
        return GraphStats(
            node_count=n,
            edge_count=self.num_edges,
            distinct_times=len({e.t for e in self.edges}),
            max_out_degree=max(out_deg, default=0),
            max_in_degree=max(in_deg, default=0),
            avg_out_degree=(self.num_edges / n) if n else 0.0,
        )

    def __repr__(self) -> str:
        return (f"TemporalGraph(num_nodes={self.num_nodes}, "
                f"num_edges={self.num_edges}, uniform_lambda={self.uniform_lambda})")


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------

def load_edge_stream(source, directed: bool = True) -> TemporalGraph:
    """Parse a line-oriented edge list into a :class:`TemporalGraph`.

    Each non-comment, non-blank line is ``u v t`` or ``u v t lambda`` with
    whitespace-separated fields; ``u`` and ``v`` are arbitrary label tokens,
    ``t`` a non-negative integer and ``lambda`` a positive integer
    (defaulting to 1 when absent).  Lines starting with ``#`` or ``%`` are
    skipped.  With ``directed=False`` every line yields the two symmetric
    directed edges.  Duplicate lines are kept (multiset semantics).

    Args:
        source: a file path, an open text file, or an iterable of lines.
        directed: whether lines denote one directed edge or an undirected
            contact.

    Raises:
        EdgeListParseError: on a malformed line, with its line number.
    """
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8") as fh:
            return load_edge_stream(fh, directed=directed)

    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[TemporalEdge] = []

    def intern(token: str) -> int:
        node = index.get(token)
        if node is None:
            node = len(labels)
            index[token] = node
            labels.append(token)
        return node

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        fields = line.split()
        if len(fields) not in (3, 4):
            raise EdgeListParseError(lineno, f"expected 3 or 4 fields, got {len(fields)}")
        if fields[0] == fields[1]:
            raise EdgeListParseError(lineno, "self-loop")
        try:
            t = int(fields[2])
            lam = int(fields[3]) if len(fields) == 4 else 1
        except ValueError:
            raise EdgeListParseError(lineno, "non-integer time field") from None
        if t < 0:
            raise EdgeListParseError(lineno, f"availability time must be >= 0, got {t}")
        if lam < 1:
            raise EdgeListParseError(lineno, f"transition time must be >= 1, got {lam}")
        u = intern(fields[0])
        v = intern(fields[1])
        edges.append(TemporalEdge(u, v, t, lam))
        if not directed:
            edges.append(TemporalEdge(v, u, t, lam))

    return TemporalGraph(len(labels), edges, labels)


def loads_edge_stream(text: str, directed: bool = True) -> TemporalGraph:
    """Parse an edge list held in a string."""
    return load_edge_stream(io.StringIO(text), directed=directed)


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------

def restrict_interval(g: TemporalGraph, a: int, b: int) -> TemporalGraph:
    """Keep exactly the edges that start and arrive inside ``[a, b]``.

    An edge survives iff ``t >= a`` and ``t + lambda <= b``.  The node set
    is unchanged.  Idempotent for a fixed interval.
    """
    if a > b:
        raise InvalidIntervalError(f"invalid interval [{a}, {b}]")
    kept = [e for e in g.edges if e.t >= a and e.arrival <= b]
    return TemporalGraph(g.num_nodes, kept, g.labels)


def remove_isolated_nodes(g: TemporalGraph) -> TemporalGraph:
    """Drop nodes with no incident edge and re-index the rest densely."""
    incident = [False] * g.num_nodes
    for e in g.edges:
        incident[e.u] = True
        incident[e.v] = True
    remap = [-1] * g.num_nodes
    labels = []
    for old in range(g.num_nodes):
        if incident[old]:
            remap[old] = len(labels)
            labels.append(g.labels[old])
    edges = [TemporalEdge(remap[e.u], remap[e.v], e.t, e.lam) for e in g.edges]
    return TemporalGraph(len(labels), edges, labels)


def temporal_transpose(g: TemporalGraph) -> TemporalGraph:
    """Reverse every edge and mirror time: ``(u,v,t,lam) -> (v,u,tmax-t,lam)``
    with ``tmax = max(t + lam)``.

    Runs in O(|E|) time and space.  An empty graph is returned unchanged.
    Note that applying the transpose twice reproduces the original edge
    multiset only when the earliest availability time equals the (uniform)
    transition time; in general the result is a uniform time shift, which
    leaves every temporal index value unchanged.
    """
    if not g.edges:
        return TemporalGraph(g.num_nodes, [], g.labels)
    tmax = max(e.arrival for e in g.edges)
    edges = [TemporalEdge(e.v, e.u, tmax - e.t, e.lam) for e in g.edges]
    return TemporalGraph(g.num_nodes, edges, g.labels)


def aggregate(g: TemporalGraph) -> "StaticGraph":
    """Drop time stamps and merge parallel edges into a static directed graph."""
    adj: list[set[int]] = [set() for _ in range(g.num_nodes)]
    for e in g.edges:
        adj[e.u].add(e.v)
    return StaticGraph(g.num_nodes, adj, directed=True)


# ---------------------------------------------------------------------------
# Time-dependent degrees and neighborhoods
# ---------------------------------------------------------------------------

def out_degree_at(g: TemporalGraph, u: int, t: int) -> int:
    """Number of edges leaving ``u`` with availability time ``>= t``."""
    times = g.out_times[u]
    return len(times) - bisect_left(times, t)


def in_degree_at(g: TemporalGraph, u: int, t: int) -> int:
    """Number of edges arriving at ``u`` no later than ``t``."""
    arrivals = g.in_arrivals[u]
    return bisect_right(arrivals, t)


def temporal_neighborhood(g: TemporalGraph, v: int, t: int,
                          direction: str = "out") -> list[tuple[int, int]]:
    """Time-stamped neighbor multiset of ``v`` at time ``t``.

    Outward: pairs ``(w, t' + lambda)`` for out-edges with ``t' >= t``
    (arrival times).  Inward: pairs ``(w, t_w)`` for in-edges with
    ``t_w + lambda <= t`` (start times).  Parallel edges yield duplicate
    pairs.
    """
    if direction == "out":
        return [(e.v, e.arrival) for e in g.out_adj[v] if e.t >= t]
    if direction == "in":
        return [(e.u, e.t) for e in g.in_adj[v] if e.arrival <= t]
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


# ---------------------------------------------------------------------------
# Static graphs
# ---------------------------------------------------------------------------

class StaticGraph:
    """Static graph with per-node neighbor sets; no parallel edges or loops."""

    def __init__(self, num_nodes: int, adj: Sequence[set[int]], directed: bool = False):
        if len(adj) != num_nodes:
            raise ValueError("adjacency must have one entry per node")
        self.num_nodes = num_nodes
        self.adj = [set(nbrs) for nbrs in adj]
        self.directed = directed
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise ValueError(f"self-loop on node {u}")
        if not directed:
            for u, nbrs in enumerate(self.adj):
                for v in nbrs:
                    if u not in self.adj[v]:
                        raise ValueError("undirected graph with asymmetric adjacency")

    @property
    def num_edges(self) -> int:
        total = sum(len(nbrs) for nbrs in self.adj)
        return total if self.directed else total // 2

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def undirected(self) -> "StaticGraph":
        """Symmetrized copy; identity for already-undirected graphs."""
        if not self.directed:
            return self
        adj: list[set[int]] = [set(nbrs) for nbrs in self.adj]
        for u in range(self.num_nodes):
            for v in self.adj[u]:
                adj[v].add(u)
        return StaticGraph(self.num_nodes, adj, directed=False)

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"StaticGraph({kind}, num_nodes={self.num_nodes}, num_edges={self.num_edges})"
