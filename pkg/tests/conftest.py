"""Shared fixtures: bundled toy networks and random-graph generators."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from thindex import TemporalEdge, TemporalGraph, load_edge_stream

DATA_DIR = Path(__file__).parent / "data"

# Expected index values for the bundled 10-node network (nodes a..j).
TOY10_OUTWARD = {
    0: [3, 2, 2, 4, 4, 4, 5, 5, 2, 3],
    1: [1, 0, 0, 1, 2, 3, 2, 1, 0, 1],
    2: [1, 0, 0, 1, 1, 1, 1, 0, 0, 1],
    3: [1, 0, 0, 1, 0, 1, 0, 0, 0, 1],
    4: [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
}
TOY10_STATIC = {
    0: [3, 2, 2, 4, 4, 4, 5, 5, 2, 3],
    1: [2, 2, 2, 3, 3, 4, 3, 3, 2, 2],
    2: [2, 2, 2, 3, 3, 3, 3, 3, 2, 2],
}

# Expected 1st-order values for the bundled 5-node network (nodes a..e).
TOY5_OUTWARD_H1 = [2, 2, 4, 1, 2]
TOY5_INWARD_H1 = [0, 2, 1, 3, 3]
TOY5_STATIC_H = [3, 3, 3, 3, 3]


@pytest.fixture(scope="session")
def toy10() -> TemporalGraph:
    return load_edge_stream(DATA_DIR / "toy10.txt", directed=False)


@pytest.fixture(scope="session")
def toy5() -> TemporalGraph:
    return load_edge_stream(DATA_DIR / "toy5.txt", directed=False)


def by_label(g: TemporalGraph, values, labels: str) -> list[int]:
    """Reorder a per-node vector into the given label order."""
    return [int(values[g.node_id(lab)]) for lab in labels]


def random_temporal_graph(rng: random.Random, max_nodes: int = 12,
                          max_edges: int = 60, max_time: int = 20,
                          lam: int = 1) -> TemporalGraph:
    """Uniformly sampled small temporal graph with unit transition times."""
    n_nodes = rng.randint(2, max_nodes)
    n_edges = rng.randint(1, max_edges)
    edges = []
    for _ in range(n_edges):
        u = rng.randrange(n_nodes)
        v = rng.randrange(n_nodes)
        while v == u:
            v = rng.randrange(n_nodes)
        edges.append(TemporalEdge(u, v, rng.randint(1, max_time), lam))
    return TemporalGraph(n_nodes, edges)


def random_mixed_lambda_graph(rng: random.Random, max_nodes: int = 10,
                              max_edges: int = 40, max_time: int = 20,
                              max_lam: int = 4) -> TemporalGraph:
    """Random graph with individual transition times (recursive engine only)."""
    n_nodes = rng.randint(2, max_nodes)
    n_edges = rng.randint(1, max_edges)
    edges = []
    for _ in range(n_edges):
        u = rng.randrange(n_nodes)
        v = rng.randrange(n_nodes)
        while v == u:
            v = rng.randrange(n_nodes)
        edges.append(TemporalEdge(u, v, rng.randint(0, max_time),
                                  rng.randint(1, max_lam)))
    return TemporalGraph(n_nodes, edges)


def brute_force_reachable(g: TemporalGraph, source: int) -> set[int]:
    """Independent reachability oracle: fixpoint over (node, time) states.

    Grows the full set of (node, earliest-usable-time) pairs realizable by
    temporal walks, with no earliest-arrival pruning beyond the state
    space itself.
    """
    states = {(source, 0)}
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            for node, t in list(states):
                if node == e.u and t <= e.t:
                    state = (e.v, e.arrival)
                    if state not in states:
                        states.add(state)
                        changed = True
    return {node for node, _ in states}
