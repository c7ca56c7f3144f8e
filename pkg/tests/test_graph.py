import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphforge import (
    CommunityAssignment,
    DataSplit,
    Graph,
    community_sizes,
    degree_sequence,
)
from graphforge.graph import sanitize_edges


def complete_graph(n):
    u, v = np.triu_indices(n, k=1)
    return Graph.from_edges(n, np.column_stack([u, v]))


class TestGraphConstruction:
    def test_canonicalizes_orientation_and_duplicates(self):
        g = Graph.from_edges(4, [(1, 0), (0, 1), (2, 2), (3, 1), (1, 3)])
        assert g.edges.tolist() == [[0, 1], [1, 3]]

    def test_drop_count(self):
        _, dropped = sanitize_edges(4, [(1, 0), (0, 1), (2, 2), (3, 1)])
        assert dropped == 2  # one duplicate + one self loop

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_adjacency_consistent(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
        assert g.neighbors(0).tolist() == [1, 2]
        assert g.neighbors(2).tolist() == [0, 1]
        assert g.neighbors(4).tolist() == [3]

    @settings(max_examples=200)
    @given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9))))
    def test_construction_idempotent(self, raw_edges):
        g = Graph.from_edges(10, raw_edges)
        again = Graph.from_edges(10, g.edges)
        assert np.array_equal(g.edges, again.edges)
        assert len(g.edges) == 0 or (g.edges[:, 0] < g.edges[:, 1]).all()

    def test_edges_are_immutable(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            g.edges[0, 0] = 2


class TestDegreeSequence:
    def test_complete_graph(self):
        assert degree_sequence(complete_graph(4)).tolist() == [3, 3, 3, 3]

    def test_path(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert degree_sequence(g).tolist() == [1, 2, 1]

    def test_empty_graph(self):
        g = Graph.from_edges(3, [])
        assert degree_sequence(g).tolist() == [0, 0, 0]

    def test_sums_to_twice_edge_count_on_random_graphs(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            n = int(rng.integers(1, 30))
            m = int(rng.integers(0, 40))
            raw = rng.integers(0, n, size=(m, 2))
            g = Graph.from_edges(n, raw)
            assert degree_sequence(g).sum() == 2 * g.num_edges


class TestCommunityAssignment:
    def test_sizes(self):
        c = CommunityAssignment.from_labels([0, 0, 1], 2)
        assert community_sizes(c).tolist() == [2, 1]

    def test_singleton_communities(self):
        c = CommunityAssignment.from_labels([0, 1, 2], 3)
        assert community_sizes(c).tolist() == [1, 1, 1]

    def test_order_follows_label_index(self):
        c = CommunityAssignment.from_labels([1, 1, 1, 0], 2)
        assert community_sizes(c).tolist() == [1, 3]

    def test_rejects_empty_community(self):
        with pytest.raises(ValueError):
            CommunityAssignment.from_labels([0, 0, 0], 2)

    def test_rejects_out_of_range_label(self):
        with pytest.raises(ValueError):
            CommunityAssignment.from_labels([0, 2], 2)


class TestDataSplit:
    def test_rejects_overlap(self):
        with pytest.raises(ValueError):
            DataSplit.from_indices([0, 1], [1], [2])

    def test_sorted_storage(self):
        s = DataSplit.from_indices([3, 1], [2], [0])
        assert s.train.tolist() == [1, 3]
