"""Graph model: parsing, transforms, and time-dependent degree queries."""

import random

import pytest

from thindex import (INFINITY, EdgeListParseError, InvalidIntervalError,
                     TemporalEdge, TemporalGraph, aggregate, in_degree_at,
                     loads_edge_stream, out_degree_at, remove_isolated_nodes,
                     restrict_interval, temporal_neighborhood,
                     temporal_transpose)

from conftest import random_temporal_graph


class TestLoadEdgeStream:
    def test_directed_basic(self):
        g = loads_edge_stream("a b 1\nb c 4\n")
        assert g.num_nodes == 3
        assert g.num_edges == 2
        assert g.uniform_lambda
        assert [e.t for e in g.edges] == [1, 4]

    def test_undirected_expansion(self):
        g = loads_edge_stream("a b 2\n", directed=False)
        a, b = g.node_id("a"), g.node_id("b")
        assert sorted(g.edges) == sorted([TemporalEdge(a, b, 2, 1),
                                          TemporalEdge(b, a, 2, 1)])

    def test_self_loop_rejected(self):
        with pytest.raises(EdgeListParseError) as err:
            loads_edge_stream("a a 1\n")
        assert err.value.line_number == 1

    def test_explicit_lambda_and_default(self):
        g = loads_edge_stream("a b 1 3\nb c 2\n")
        assert [e.lam for e in g.edges] == [3, 1]
        assert not g.uniform_lambda

    @pytest.mark.parametrize("line", ["a b", "a b c d e", "a b x", "a b 1 0",
                                      "a b -1", "a b 1 -2"])
    def test_malformed_lines(self, line):
        with pytest.raises(EdgeListParseError) as err:
            loads_edge_stream(f"# header\n{line}\n")
        assert err.value.line_number == 2

    def test_comments_and_blank_lines_skipped(self):
        g = loads_edge_stream("# comment\n% other comment\n\na b 5\n")
        assert g.num_edges == 1

    def test_duplicate_lines_kept(self):
        g = loads_edge_stream("a b 1\na b 1\n")
        assert g.num_edges == 2

    def test_sorted_by_time_stable(self):
        g = loads_edge_stream("a b 7\nc d 2\ne f 7\n")
        assert [e.t for e in g.edges] == [2, 7, 7]
        # equal times keep input order
        assert g.labels[g.edges[1].u] == "a"
        assert g.labels[g.edges[2].u] == "e"

    def test_labels_round_trip(self):
        g = loads_edge_stream("x7 y8 1\n")
        assert g.labels[g.node_id("x7")] == "x7"


class TestRestrictInterval:
    def test_basic_filter(self):
        g = loads_edge_stream("a b 1\nb c 4\n")
        got = restrict_interval(g, 0, 3)
        assert [(e.t, e.lam) for e in got.edges] == [(1, 1)]
        assert got.num_nodes == g.num_nodes

    def test_unbounded_is_identity(self):
        g = loads_edge_stream("a b 1\nb c 4\n")
        got = restrict_interval(g, 0, INFINITY)
        assert got.edges == g.edges

    def test_arrival_must_fit(self):
        g = loads_edge_stream("a b 3 2\n")
        assert restrict_interval(g, 3, 4).num_edges == 0
        assert restrict_interval(g, 3, 5).num_edges == 1

    def test_invalid_interval(self):
        g = loads_edge_stream("a b 1\n")
        with pytest.raises(InvalidIntervalError):
            restrict_interval(g, 5, 4)

    def test_idempotent(self):
        rng = random.Random(3)
        g = random_temporal_graph(rng)
        once = restrict_interval(g, 4, 15)
        twice = restrict_interval(once, 4, 15)
        assert once.edges == twice.edges


class TestRemoveIsolatedNodes:
    def test_drops_and_reindexes(self):
        g = TemporalGraph(5, [TemporalEdge(0, 1, 1, 1)],
                          labels=list("abcde"))
        got = remove_isolated_nodes(g)
        assert got.num_nodes == 2
        assert got.labels == ["a", "b"]
        assert got.edges == [TemporalEdge(0, 1, 1, 1)]

    def test_no_isolated_is_identity(self):
        g = loads_edge_stream("a b 1\nb c 2\n")
        got = remove_isolated_nodes(g)
        assert got.num_nodes == g.num_nodes
        assert got.edges == g.edges

    def test_empty_graph(self):
        g = TemporalGraph(4, [])
        assert remove_isolated_nodes(g).num_nodes == 0


class TestAggregate:
    def test_merges_parallel_edges(self):
        g = loads_edge_stream("a b 1\na b 7\n")
        s = aggregate(g)
        assert s.directed
        assert s.num_edges == 1

    def test_empty(self):
        s = aggregate(TemporalGraph(3, []))
        assert s.num_edges == 0

    def test_undirected_symmetrization(self):
        g = loads_edge_stream("a b 1\n")
        s = aggregate(g).undirected()
        a, b = g.node_id("a"), g.node_id("b")
        assert s.adj[a] == {b} and s.adj[b] == {a}


class TestTemporalTranspose:
    def test_formula(self):
        g = loads_edge_stream("a b 1\nb c 4\n")
        got = temporal_transpose(g)
        a, b, c = (g.node_id(x) for x in "abc")
        assert sorted(got.edges) == sorted([TemporalEdge(b, a, 4, 1),
                                            TemporalEdge(c, b, 1, 1)])

    def test_time_zero_edge(self):
        g = loads_edge_stream("u v 0\n")
        got = temporal_transpose(g)
        assert got.edges[0].t == 1
        assert (got.edges[0].u, got.edges[0].v) == (g.node_id("v"), g.node_id("u"))

    def test_empty_graph(self):
        g = TemporalGraph(2, [])
        assert temporal_transpose(g).num_edges == 0

    def test_preserves_counts_and_lambdas(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_temporal_graph(rng)
            got = temporal_transpose(g)
            assert got.num_nodes == g.num_nodes
            assert got.num_edges == g.num_edges
            assert sorted(e.lam for e in got.edges) == sorted(e.lam for e in g.edges)

    def test_double_transpose_round_trip(self):
        # exact round trip requires the earliest time to equal lambda
        rng = random.Random(12)
        for _ in range(30):
            g = random_temporal_graph(rng)
            edges = list(g.edges)
            edges.append(TemporalEdge(0, 1, 1, 1))  # pin the earliest time to 1
            g = TemporalGraph(g.num_nodes, edges)
            back = temporal_transpose(temporal_transpose(g))
            assert sorted(back.edges) == sorted(g.edges)


class TestTimeDependentDegrees:
    def test_out_degree_examples(self):
        g = loads_edge_stream("a b 1\na c 3\n")
        a = g.node_id("a")
        assert out_degree_at(g, a, 2) == 1
        assert out_degree_at(g, a, 0) == 2
        assert out_degree_at(g, a, 4) == 0

    def test_in_degree_examples(self):
        g = loads_edge_stream("a b 1\n")
        b = g.node_id("b")
        assert in_degree_at(g, b, 2) == 1
        assert in_degree_at(g, b, 1) == 0
        assert in_degree_at(g, b, INFINITY) == 1
        assert in_degree_at(g, g.node_id("a"), INFINITY) == 0

    def test_monotone_in_time(self):
        rng = random.Random(5)
        for _ in range(10):
            g = random_temporal_graph(rng)
            for u in range(g.num_nodes):
                outs = [out_degree_at(g, u, t) for t in range(0, 23)]
                ins = [in_degree_at(g, u, t) for t in range(0, 23)]
                assert outs == sorted(outs, reverse=True)
                assert ins == sorted(ins)


class TestTemporalNeighborhood:
    def test_multiset_duplicates(self):
        g = loads_edge_stream("a b 1\na b 1\n")
        a, b = g.node_id("a"), g.node_id("b")
        assert temporal_neighborhood(g, a, 0, "out") == [(b, 2), (b, 2)]

    def test_outward_arrival_times(self):
        g = loads_edge_stream("a b 1\na c 3 2\n")
        a, c = g.node_id("a"), g.node_id("c")
        assert temporal_neighborhood(g, a, 2, "out") == [(c, 5)]

    def test_inward_empty_at_zero(self):
        g = loads_edge_stream("a b 1\nc a 4\n")
        assert temporal_neighborhood(g, g.node_id("a"), 0, "in") == []

    def test_sizes_match_degrees(self):
        rng = random.Random(9)
        for _ in range(10):
            g = random_temporal_graph(rng)
            for u in range(g.num_nodes):
                for t in (0, 5, 12, INFINITY):
                    assert len(temporal_neighborhood(g, u, t, "out")) == out_degree_at(g, u, t)
                    assert len(temporal_neighborhood(g, u, t, "in")) == in_degree_at(g, u, t)


class TestStats:
    def test_counts(self, toy10):
        s = toy10.stats()
        assert s.node_count == 10
        assert s.edge_count == 34
        assert s.max_out_degree == 5
        assert s.max_in_degree == 5
        assert s.avg_out_degree == pytest.approx(3.4)
        assert s.distinct_times == 6
        assert s.max_out_degree >= s.avg_out_degree >= 0
