"""Memoized recursive engine for the n-th order temporal H-index.

Evaluates the defining recursion directly: the order-n value of a node at
time ``t`` is the H operator applied to the order-(n-1) values of its
time-compatible neighbors, with the time-dependent degree as the base
case.  Outward queries start at time 0 and follow arrival times; inward
queries start at infinity and follow start times.  Works for arbitrary
per-edge transition times.

Memoization keys each node/order pair by query time; since query times are
restricted to incident edge times (plus the root time), the tables hold at
most O(|V| * n * max_degree) entries, and each is computed once, giving
O(|V| * n * max_degree^2) total work.  The evaluation stack is explicit,
so deep orders do not hit the interpreter recursion limit.
"""

from __future__ import annotations

import numpy as np

from .graph import INFINITY, TemporalGraph, in_degree_at, out_degree_at
from .hops import h_operator


def recurs_compute(g: TemporalGraph, n: int, direction: str = "out",
                   memoize: bool = True) -> np.ndarray:
    """Order-``n`` temporal H-index of every node, in one direction.

    Args:
        g: temporal graph (individual transition times supported).
        n: order, >= 0.  Order 0 yields time-dependent total degrees.
        direction: "out" for spreading ability, "in" for receivability.
        memoize: disable only for tiny graphs; the plain recursion is
            exponential and exists as a cross-check.

    Returns:
        int64 array of length ``g.num_nodes``.
    """
    values, _ = _compute(g, n, direction, memoize)
    return values


def recurs_compute_with_stats(g: TemporalGraph, n: int, direction: str = "out"):
    """Like :func:`recurs_compute`, returning ``(values, memo_entries)``."""
    return _compute(g, n, direction, memoize=True)


def _compute(g: TemporalGraph, n: int, direction: str, memoize: bool):
    if n < 0:
        raise ValueError("order must be >= 0")
    if direction not in ("in", "out"):
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")

    root_time = 0 if direction == "out" else INFINITY
    evaluate = _memo_evaluator(g, direction) if memoize else _plain_evaluator(g, direction)
    values = np.zeros(g.num_nodes, dtype=np.int64)
    for v in range(g.num_nodes):
        values[v] = evaluate(v, n, root_time)
    entries = getattr(evaluate, "memo_entries", lambda: 0)()
    return values, entries


def _children(g: TemporalGraph, direction: str):
    """Per-node child expansion: time-compatible neighbors with query times."""
    if direction == "out":
        out_adj = g.out_adj

        def expand(v: int, t: int) -> list[tuple[int, int]]:
            # out-edges sorted by availability; children carry arrival times
            return [(e.v, e.arrival) for e in out_adj[v] if e.t >= t]

        return expand, out_degree_at

    in_adj = g.in_adj

    def expand(v: int, t: int) -> list[tuple[int, int]]:
        # in-edges sorted by arrival; children carry start times
        return [(e.u, e.t) for e in in_adj[v] if e.arrival <= t]

    return expand, in_degree_at


def _memo_evaluator(g: TemporalGraph, direction: str):
    expand, degree_at = _children(g, direction)
    # memo[v][i] maps query time -> value; entries are written exactly once
    memo: list[list[dict[int, int]]] = []
    max_order = -1

    def ensure_order(n: int) -> None:
        nonlocal max_order, memo
        if n > max_order:
            if not memo:
                memo = [[{} for _ in range(n + 1)] for _ in range(g.num_nodes)]
            else:
                for rows in memo:
                    rows.extend({} for _ in range(n - max_order))
            max_order = n

    def evaluate(v: int, n: int, t: int) -> int:
        ensure_order(n)
        stack = [(v, n, t, False)]
        while stack:
            node, order, qt, expanded = stack.pop()
            table = memo[node][order]
            if qt in table:
                continue
            deg = degree_at(g, node, qt)
            if order == 0 or deg == 0:
                table[qt] = deg
                continue
            children = expand(node, qt)
            if expanded:
                table[qt] = h_operator(
                    [memo[w][order - 1][tw] for w, tw in children])
            else:
                stack.append((node, order, qt, True))
                lower = order - 1
                for w, tw in children:
                    if tw not in memo[w][lower]:
                        stack.append((w, lower, tw, False))
        return memo[v][n][t]

    evaluate.memo_entries = lambda: sum(
        len(table) for rows in memo for table in rows)
    return evaluate


def _plain_evaluator(g: TemporalGraph, direction: str):
    expand, degree_at = _children(g, direction)

    def evaluate(v: int, n: int, t: int) -> int:
        deg = degree_at(g, v, t)
        if n == 0 or deg == 0:
            return deg
        return h_operator([evaluate(w, n - 1, tw) for w, tw in expand(v, t)])

    return evaluate
