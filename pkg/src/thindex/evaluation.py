"""Spreading simulation and ranking comparison for super-spreader studies.

A stochastic susceptible-infected-recovered process replays the contact
stream in chronological order: an infectious endpoint of a contact infects
a susceptible one with a fixed probability, and infected nodes recover
after an exponentially distributed delay.  A node's influence is the
final number of ever-infected nodes when it is the single initial seed.
Rankings produced by centrality heuristics are scored against the
simulated influence ranking with the tie-adjusted Kendall correlation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import kendalltau

from ._concurrency import ordered_map
from .compute import hindex_vector
from .errors import DegenerateRankingError
from .graph import TemporalGraph, aggregate
from .hops import k_core, static_h_index

#: Mean recovery delay in network time units.
DEFAULT_RECOVERY_MEAN = 20.0


@dataclass(frozen=True)
class SirParams:
    """Parameters of the spreading process.

    ``recovery_mean`` parameterizes the exponential recovery delay by its
    mean, measured in the time units of the input data.  ``rng_seed``
    fixes the whole experiment: every (seed node, trial) pair derives an
    independent stream from it, so results do not depend on execution
    order.
    """

    beta: float
    recovery_mean: float = DEFAULT_RECOVERY_MEAN
    trials: int = 1000
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError("beta must be in [0, 1]")
        if self.recovery_mean <= 0:
            raise ValueError("recovery_mean must be positive")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


def sir_simulate(g: TemporalGraph, seed_node: int, p: SirParams,
                 trial_rng: np.random.Generator) -> int:
    """One trial: final influence of ``seed_node`` (ever-infected count)."""
    influence, _ = _sir_trial(g, seed_node, p, trial_rng)
    return influence


def _sir_trial(g: TemporalGraph, seed_node: int, p: SirParams,
               rng: np.random.Generator, record: bool = False):
    """Replay the contact stream once; optionally record infection events.

    The seed is infected at the first time stamp of the data.  An
    infectious node transmits on contacts from its infection time (same
    time step included) until its recovery clock, a continuous delay drawn
    on infection, runs out.
    """
    if not (0 <= seed_node < g.num_nodes):
        raise ValueError(f"seed node {seed_node} out of range")
    events: list[tuple[int, int, int]] = []  # (victim, time, infector)
    if not g.edges or p.beta == 0.0:
        return 1, events

    inf = math.inf
    inf_time = [inf] * g.num_nodes
    rec_time = [0.0] * g.num_nodes
    start = g.edges[0].t
    inf_time[seed_node] = start
    rec_time[seed_node] = start + rng.exponential(p.recovery_mean)
    latest_recovery = rec_time[seed_node]
    infected = 1
    beta = p.beta
    random = rng.random
    exponential = rng.exponential

    for e in g.edges:
        t = e.t
        if t > latest_recovery:
            break  # nobody is or will ever be infectious again
        u = e.u
        if inf_time[u] <= t < rec_time[u] and inf_time[e.v] == inf:
            if random() < beta:
                v = e.v
                inf_time[v] = t
                rec_time[v] = t + exponential(p.recovery_mean)
                if rec_time[v] > latest_recovery:
                    latest_recovery = rec_time[v]
                infected += 1
                if record:
                    events.append((v, t, u))
    return infected, events


def _trial_rng(rng_seed: int, node: int, trial: int) -> np.random.Generator:
    """Independent, order-free stream for one (seed node, trial) pair."""
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence([rng_seed, node, trial])))


def sir_ranking(g: TemporalGraph, p: SirParams) -> np.ndarray:
    """Mean influence of every node over ``p.trials`` independent trials.

    Deterministic for a fixed ``p.rng_seed``; trials are folded in index
    order, so the result is independent of any internal concurrency.
    """
    def mean_influence(node: int) -> float:
        total = 0
        for trial in range(p.trials):
            total += sir_simulate(g, node, p, _trial_rng(p.rng_seed, node, trial))
        return total / p.trials

    return np.array(ordered_map(mean_influence, range(g.num_nodes)), dtype=np.float64)


# ---------------------------------------------------------------------------
# Rank correlation
# ---------------------------------------------------------------------------

def kendall_tau_b(a, b) -> float:
    """Tie-adjusted Kendall correlation of two score vectors, in [-1, 1].

    Scores are compared raw (higher score = higher rank).  An all-tied
    vector on either side leaves the coefficient undefined.

    Raises:
        DegenerateRankingError: when either ranking is a single tie group.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("rankings must be one-dimensional and equally long")
    if a.size < 2:
        raise ValueError("rankings need at least two entries")
    if not (np.isfinite(a).all() and np.isfinite(b).all()):
        raise ValueError("rankings must be finite")
    if (a == a[0]).all() or (b == b[0]).all():
        raise DegenerateRankingError("all-tied ranking has no defined correlation")
    return float(kendalltau(a, b, variant="b").statistic)


# ---------------------------------------------------------------------------
# Heuristic rankings
# ---------------------------------------------------------------------------

def heuristic_rankings(g: TemporalGraph, n_values=(32, 64)) -> dict[str, np.ndarray]:
    """Named score vectors for the standard spreading heuristics.

    Outward temporal H-index at each requested order, plus static degree,
    H-index, and core number on the symmetrized aggregated graph.
    """
    rankings: dict[str, np.ndarray] = {}
    for n in n_values:
        rankings[f"thi_n{n}"] = hindex_vector(g, n, "out").astype(np.float64)
    static = aggregate(g).undirected()
    degrees = np.array([static.degree(u) for u in range(static.num_nodes)],
                       dtype=np.float64)
    rankings["degree"] = degrees
    rankings["h_index"] = static_h_index(static).astype(np.float64)
    rankings["k_core"] = k_core(static).astype(np.float64)
    return rankings
