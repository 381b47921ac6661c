"""Reachability trees, temporal reachability, diameter, and core scores.

The reachability tree of a node materializes every temporal walk leaving
(or entering) it, one tree node per (graph node, time) pair.  It is test
machinery, not an algorithmic data structure: tree sizes grow
exponentially, so construction takes a mandatory depth cap and a node
budget.  Evaluating the depth-indexed walk recursion on the tree gives an
independent oracle for both index engines.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from ._concurrency import ordered_map
from .errors import TreeBudgetError, UndefinedScoreError
from .graph import INFINITY, TemporalGraph

DEFAULT_TREE_BUDGET = 10**7


# A tree node is the plain tuple (node, time, depth, children) where
# children is a list of tree nodes; tuples keep the construction of
# multi-million-node oracle trees affordable.
TreeNode = tuple
NODE, TIME, DEPTH, CHILDREN = range(4)


@dataclass
class ReachabilityTree:
    root: TreeNode
    direction: str
    depth_cap: int
    size: int  # total tree nodes including the root


def build_reachability_tree(g: TemporalGraph, v: int, direction: str = "out",
                            depth_cap: int = 4,
                            budget: int = DEFAULT_TREE_BUDGET) -> ReachabilityTree:
    """Expand every temporal walk from ``v`` into a tree, up to ``depth_cap``.

    Outward trees root at ``(v, 0)`` and children carry arrival times;
    inward trees root at ``(v, infinity)`` and children carry start times.
    Each tree node at depth d corresponds to one temporal walk of d edges.

    Raises:
        TreeBudgetError: when the expansion would exceed ``budget`` nodes.
    """
    if depth_cap < 0:
        raise ValueError("depth_cap must be >= 0")
    if direction not in ("in", "out"):
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")
    outward = direction == "out"
    if outward:
        adj = g.out_adj
        keys = g.out_times  # sorted availability times per node
    else:
        adj = g.in_adj
        keys = g.in_arrivals  # sorted arrival times per node

    root = (v, 0 if outward else INFINITY, 0, [])
    size = 1
    frontier = [root]
    for depth in range(1, depth_cap + 1):
        nxt: list[tuple] = []
        for parent in frontier:
            node, t = parent[NODE], parent[TIME]
            if outward:
                compatible = adj[node][bisect_left(keys[node], t):]
                children = [(e.v, e.t + e.lam, depth, []) for e in compatible]
            else:
                compatible = adj[node][:bisect_right(keys[node], t)]
                children = [(e.u, e.t, depth, []) for e in compatible]
            parent[CHILDREN].extend(children)
            nxt.extend(children)
            size += len(children)
            if size > budget:
                raise TreeBudgetError(
                    f"reachability tree of node {v} exceeds {budget} nodes "
                    f"at depth {depth}")
        frontier = nxt
    return ReachabilityTree(root, direction, depth_cap, size)


def phi(tree: ReachabilityTree, n: int) -> int:
    """Walk-tree value at the root: equals the order-``n`` index of the root node.

    Defined bottom-up on the tree: nodes at depth ``n`` contribute their
    child count, deeper nodes 0, and shallower nodes fold their children
    through the H operator.  Requires ``depth_cap >= n + 1`` so the child
    counts at depth ``n`` are complete.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    if tree.depth_cap < n + 1:
        raise ValueError(
            f"tree depth cap {tree.depth_cap} too small for order {n}; "
            f"need at least {n + 1}")
    from .hops import h_operator

    def value(node: TreeNode) -> int:
        depth = node[DEPTH]
        if depth == n:
            return len(node[CHILDREN])
        if depth > n:
            return 0
        return h_operator([value(c) for c in node[CHILDREN]])

    return value(tree.root)


def phi_all(tree: ReachabilityTree, n_max: int) -> list[int]:
    """Root values for every order ``0..n_max`` in one bottom-up pass.

    Equivalent to ``[phi(tree, n) for n in range(n_max + 1)]``; the orders
    share the same traversal.
    """
    if n_max < 0:
        raise ValueError("order must be >= 0")
    if tree.depth_cap < n_max + 1:
        raise ValueError(
            f"tree depth cap {tree.depth_cap} too small for order {n_max}; "
            f"need at least {n_max + 1}")
    from .hops import h_operator

    def values(node: TreeNode) -> list[int]:
        depth = node[DEPTH]
        out = [0] * (n_max + 1)
        if depth > n_max:
            return out
        children = node[CHILDREN]
        out[depth] = len(children)
        child_values = [values(c) for c in children]
        for n in range(depth + 1, n_max + 1):
            out[n] = h_operator([cv[n] for cv in child_values])
        return out

    return values(tree.root)


def descendant_count(tree: ReachabilityTree, n: int) -> int:
    """Number of proper descendants of the root with depth at most ``n + 1``.

    Each such descendant is one temporal walk of length <= n + 1; a root
    value of ``k`` at order ``n`` guarantees at least
    ``(k^(n+2) - k) / (k - 1)`` of them (``n + 1`` when k = 1).
    """
    if tree.depth_cap < n + 1:
        raise ValueError(
            f"tree depth cap {tree.depth_cap} too small; need at least {n + 1}")
    limit = n + 1
    count = 0
    stack = [tree.root]
    while stack:
        node = stack.pop()
        for c in node[CHILDREN]:
            if c[DEPTH] <= limit:
                count += 1
                stack.append(c)
    return count


# ---------------------------------------------------------------------------
# Temporal reachability
# ---------------------------------------------------------------------------

def earliest_arrivals(g: TemporalGraph, source: int) -> list[int]:
    """Earliest arrival time at every node for walks leaving ``source``.

    One chronological pass: an edge extends a walk iff its availability
    time is at or after the earliest arrival at its tail.  The source
    starts at time 0 (the empty walk).  Unreached nodes get INFINITY.
    """
    arrival = [INFINITY] * g.num_nodes
    arrival[source] = 0
    for e in g.edges:  # chronological; predecessors settle before use
        if arrival[e.u] <= e.t and e.arrival < arrival[e.v]:
            arrival[e.v] = e.arrival
    return arrival


def reaches(g: TemporalGraph, u: int, v: int) -> bool:
    """Whether a temporal walk from ``u`` to ``v`` exists (self-reach counts)."""
    return earliest_arrivals(g, u)[v] < INFINITY


def temporal_diameter(g: TemporalGraph) -> int:
    """Length in edges of the longest temporal walk.

    Chronological dynamic program: the longest walk ending with an edge
    extends the best walk arriving at its tail in time.  Per-node arrival
    lists stay sorted, so predecessor lookups are a prefix query.
    """
    # per node: sorted arrival times and the best walk length among the
    # first i arrivals (prefix maxima rebuilt on insertion)
    arr_times: list[list[int]] = [[] for _ in range(g.num_nodes)]
    arr_lens: list[list[int]] = [[] for _ in range(g.num_nodes)]
    best = 0
    for e in g.edges:
        times = arr_times[e.u]
        idx = bisect_right(times, e.t)
        longest_in = max(arr_lens[e.u][:idx], default=0)
        length = longest_in + 1
        best = max(best, length)
        pos = bisect_right(arr_times[e.v], e.arrival)
        arr_times[e.v].insert(pos, e.arrival)
        arr_lens[e.v].insert(pos, length)
    return best


def reach_scores(g: TemporalGraph, core_nodes) -> tuple[float, float]:
    """Global and local reachability scores of a node set.

    Global: fraction of ordered pairs (core node, any node) connected by a
    temporal walk.  Local: the same fraction restricted to pairs inside
    the set.  Self-reachability counts (the empty walk), so both scores of
    a singleton are at least 1/|V| resp. 1.
    """
    core = sorted(set(core_nodes))
    if not core:
        raise UndefinedScoreError("reachability scores of an empty node set")
    core_set = set(core)

    def count_for(u: int) -> tuple[int, int]:
        arrival = earliest_arrivals(g, u)
        total = sum(1 for t in arrival if t < INFINITY)
        inside = sum(1 for w in core if arrival[w] < INFINITY)
        return total, inside

    counts = ordered_map(count_for, core)
    reach_all = sum(c[0] for c in counts)
    reach_core = sum(c[1] for c in counts)
    rho_global = reach_all / (len(core) * g.num_nodes)
    rho_local = reach_core / (len(core) ** 2)
    return rho_global, rho_local
