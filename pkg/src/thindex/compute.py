"""Engine selection for temporal H-index computations.

Two engines expose the same values: the streaming engine returns all
orders at once but requires uniform unit transition times, while the
recursive engine handles individual transition times and returns a single
order.  ``algorithm="auto"`` picks the streaming engine whenever the input
qualifies.
"""

from __future__ import annotations

import numpy as np

from .errors import UnsupportedInputError
from .graph import TemporalGraph
from .recurs import recurs_compute
from .stream import HIndexTable, stream_compute, stream_compute_inward

ALGORITHMS = ("auto", "stream", "recurs")


def stream_eligible(g: TemporalGraph, direction: str = "out") -> bool:
    """Whether the streaming engine accepts this input.

    Requires a uniform transition time of 1; outward sweeps additionally
    need availability times >= 1 (the inward path transposes first, which
    always lifts times to >= 1).
    """
    if not g.edges:
        return True
    if not (g.uniform_lambda and g.edges[0].lam == 1):
        return False
    return direction == "in" or g.edges[0].t >= 1


def hindex_table(g: TemporalGraph, n: int, direction: str = "out") -> HIndexTable:
    """All-order index table via the streaming engine."""
    if direction == "out":
        return stream_compute(g, n)
    if direction == "in":
        return stream_compute_inward(g, n)
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


def hindex_vector(g: TemporalGraph, n: int, direction: str = "out",
                  algorithm: str = "auto") -> np.ndarray:
    """Order-``n`` index of every node, choosing an engine as requested.

    Raises:
        UnsupportedInputError: algorithm="stream" on an ineligible input.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
    if algorithm == "stream" or (algorithm == "auto" and stream_eligible(g, direction)):
        return np.array(hindex_table(g, n, direction).order(n))
    return recurs_compute(g, n, direction)
