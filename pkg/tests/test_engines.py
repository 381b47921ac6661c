"""Index engines: recursive and streaming, plus their equivalence."""

import random

import numpy as np
import pytest

from thindex import (TemporalEdge, TemporalGraph, UnsupportedInputError,
                     in_degree_at, loads_edge_stream, out_degree_at,
                     recurs_compute, stream_compute, stream_compute_inward)

from conftest import (TOY5_INWARD_H1, TOY5_OUTWARD_H1, by_label,
                      random_mixed_lambda_graph, random_temporal_graph)


class TestRecurs:
    def test_two_edge_path(self):
        g = loads_edge_stream("a b 1\nb c 2\n")
        a = g.node_id("a")
        assert recurs_compute(g, 0)[a] == 1
        assert recurs_compute(g, 1)[a] == 1
        assert recurs_compute(g, 2)[a] == 0

    def test_order_zero_is_time_dependent_degree(self):
        rng = random.Random(31)
        for _ in range(10):
            g = random_mixed_lambda_graph(rng)
            out0 = recurs_compute(g, 0, "out")
            in0 = recurs_compute(g, 0, "in")
            for v in range(g.num_nodes):
                assert out0[v] == out_degree_at(g, v, 0)
                assert in0[v] == in_degree_at(g, v, 2**63 - 1)

    def test_memoization_transparent(self):
        rng = random.Random(32)
        for _ in range(8):
            g = random_mixed_lambda_graph(rng, max_nodes=7, max_edges=16)
            for n in range(4):
                for direction in ("out", "in"):
                    with_memo = recurs_compute(g, n, direction)
                    without = recurs_compute(g, n, direction, memoize=False)
                    assert list(with_memo) == list(without)

    def test_individual_transition_times(self):
        # the longer transition blocks the second hop
        g = loads_edge_stream("a b 1 5\nb c 3\n")
        a = g.node_id("a")
        assert recurs_compute(g, 1)[a] == 0

    def test_empty_graph(self):
        g = TemporalGraph(3, [])
        assert list(recurs_compute(g, 2)) == [0, 0, 0]

    def test_deep_order_does_not_overflow_stack(self):
        edges = [TemporalEdge(i, i + 1, i + 1, 1) for i in range(2000)]
        g = TemporalGraph(2001, edges)
        values = recurs_compute(g, 1500, "out")
        assert values[0] == 1  # one walk of length 2000 keeps every order at 1

    def test_toy5_first_order(self, toy5):
        assert by_label(toy5, recurs_compute(toy5, 1, "out"), "abcde") == TOY5_OUTWARD_H1
        assert by_label(toy5, recurs_compute(toy5, 1, "in"), "abcde") == TOY5_INWARD_H1


class TestStream:
    def test_order_zero_gives_out_degrees(self):
        rng = random.Random(33)
        g = random_temporal_graph(rng)
        table = stream_compute(g, 0)
        for v in range(g.num_nodes):
            assert table.values[v, 0] == out_degree_at(g, v, 0)

    def test_rejects_non_uniform_lambda(self):
        g = loads_edge_stream("a b 1 2\nb c 2\n")
        with pytest.raises(UnsupportedInputError, match="recurs"):
            stream_compute(g, 1)

    def test_rejects_uniform_lambda_not_one(self):
        g = loads_edge_stream("a b 1 2\nb c 2 2\n")
        with pytest.raises(UnsupportedInputError, match="recurs"):
            stream_compute(g, 1)

    def test_rejects_time_zero(self):
        g = loads_edge_stream("a b 0\n")
        with pytest.raises(UnsupportedInputError, match="recurs"):
            stream_compute(g, 1)

    def test_inward_handles_time_zero_via_transpose(self):
        g = loads_edge_stream("a b 0\n")
        table = stream_compute_inward(g, 1)
        assert table.values[g.node_id("b"), 0] == 1

    def test_empty_graph(self):
        table = stream_compute(TemporalGraph(4, []), 3)
        assert table.values.shape == (4, 4)
        assert not table.values.any()

    def test_single_edge_inward(self):
        g = loads_edge_stream("a b 1\n")
        table = stream_compute_inward(g, 0)
        assert table.direction == "in"
        assert table.values[g.node_id("b"), 0] == 1
        assert table.values[g.node_id("a"), 0] == 0

    def test_entry_accounting(self):
        rng = random.Random(34)
        g = random_temporal_graph(rng)
        n = 5
        table = stream_compute(g, n)
        assert table.entries == g.num_edges * (n + 2)

    def test_order_out_of_range(self):
        g = loads_edge_stream("a b 1\n")
        table = stream_compute(g, 2)
        with pytest.raises(ValueError):
            table.order(3)

    def test_run_to_run_determinism(self, toy10):
        first = stream_compute(toy10, 5)
        second = stream_compute(toy10, 5)
        assert np.array_equal(first.values, second.values)

    def test_internal_invariants_hold(self):
        rng = random.Random(35)
        for _ in range(5):
            g = random_temporal_graph(rng, max_nodes=8, max_edges=25)
            stream_compute(g, 4, check_invariants=True)

    def test_tie_order_irrelevant(self):
        rng = random.Random(36)
        for _ in range(10):
            g = random_temporal_graph(rng, max_time=4)  # force many ties
            shuffled = list(g.edges)
            rng.shuffle(shuffled)
            h = TemporalGraph(g.num_nodes, shuffled)
            assert np.array_equal(stream_compute(g, 4).values,
                                  stream_compute(h, 4).values)


class TestEngineEquivalence:
    def test_stream_equals_recurs_both_directions(self):
        rng = random.Random(37)
        for _ in range(30):
            g = random_temporal_graph(rng)
            n = 5
            out_table = stream_compute(g, n)
            in_table = stream_compute_inward(g, n)
            for order in range(n + 1):
                assert list(out_table.values[:, order]) == \
                    list(recurs_compute(g, order, "out"))
                assert list(in_table.values[:, order]) == \
                    list(recurs_compute(g, order, "in"))

    def test_toy5_matches_frozen_values(self, toy5):
        assert by_label(toy5, stream_compute(toy5, 1).values[:, 1],
                        "abcde") == TOY5_OUTWARD_H1
        assert by_label(toy5, stream_compute_inward(toy5, 1).values[:, 1],
                        "abcde") == TOY5_INWARD_H1
