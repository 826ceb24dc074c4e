import numpy as np
import pytest
from src.errors import EdgeNotInGraphError, GraphFormatError
from src.graph import (
    EdgeSubset,
    Graph,
    adjacency,
    graph_summary,
    inverse_degrees,
    load_edge_list,
    load_node_map,
    read_edge_list,
    save_edge_list,
    save_node_map,
    subgraph_from_edges,
    transition,
)


class TestReadEdgeList:
    def test_karate_counts(self, karate):
        """Karate club has 34 nodes, 78 edges and volume 156."""
        assert karate.n == 34
        assert karate.num_edges == 78
        assert karate.volume == 156
        assert karate.degrees[0] == 16
        assert karate.degrees[33] == 17

    def test_directed_pairs_symmetrized(self, tmp_path):
        """Reciprocal directed lines collapse into one undirected edge."""
        path = tmp_path / 'g.txt'
        path.write_text('# comment\n1 2\n2 1\n2 3\n2 3\n')
        g, stats = read_edge_list(path)
        assert g.n == 3
        assert g.num_edges == 2
        assert stats['reciprocal_pairs_merged'] == 1
        assert stats['repeated_lines_merged'] == 1
        assert stats['symmetrized'] is True

    def test_self_loops_dropped(self, tmp_path):
        """Self-loops are counted and dropped."""
        path = tmp_path / 'g.txt'
        path.write_text('0 0\n0 1\n')
        g, stats = read_edge_list(path)
        assert g.num_edges == 1
        assert stats['self_loops_dropped'] == 1

    def test_remap_ascending_external_ids(self, tmp_path):
        """External ids are remapped to 0..n-1 in ascending order."""
        path = tmp_path / 'g.txt'
        path.write_text('100 7\n7 42\n')
        g = load_edge_list(path)
        assert g.external_ids.tolist() == [7, 42, 100]
        assert sorted(map(tuple, g.edges.tolist())) == [(0, 1), (0, 2)]

    def test_malformed_line(self, tmp_path):
        """A line without exactly two integer ids is rejected."""
        path = tmp_path / 'g.txt'
        path.write_text('0 1\n1 2 3\n')
        with pytest.raises(GraphFormatError):
            read_edge_list(path)

    def test_non_integer_id(self, tmp_path):
        """Non-integer ids are rejected."""
        path = tmp_path / 'g.txt'
        path.write_text('a b\n')
        with pytest.raises(GraphFormatError):
            read_edge_list(path)

    def test_empty_file(self, tmp_path):
        """A file with only comments has no edges."""
        path = tmp_path / 'g.txt'
        path.write_text('# nothing here\n')
        with pytest.raises(GraphFormatError):
            read_edge_list(path)

    def test_missing_file(self, tmp_path):
        """Unreadable path is a format error."""
        with pytest.raises(GraphFormatError):
            read_edge_list(tmp_path / 'missing.txt')


class TestSaveAndNodeMap:
    def test_round_trip(self, karate, tmp_path):
        """load -> save -> load keeps the edge set."""
        path = save_edge_list(karate, tmp_path / 'edges.txt')
        again = load_edge_list(path)
        assert again == karate

    def test_node_map(self, tmp_path):
        """Node map CSV restores external ids by internal id."""
        src = tmp_path / 'g.txt'
        src.write_text('100 7\n7 42\n')
        g = load_edge_list(src)
        path = save_node_map(g, tmp_path / 'node_map.csv')
        assert load_node_map(path).tolist() == [7, 42, 100]


class TestGraphCore:
    def test_from_edges_rejects_self_loop(self):
        """Graph construction refuses self-loops."""
        with pytest.raises(GraphFormatError):
            Graph.from_edges(2, [(1, 1)])

    def test_from_edges_rejects_out_of_range(self):
        """Node ids must be below n."""
        with pytest.raises(GraphFormatError):
            Graph.from_edges(2, [(0, 2)])

    def test_transition_rows(self, s3):
        """P = D^-1 A has unit row sums."""
        p = transition(s3).toarray()
        np.testing.assert_allclose(p.sum(axis=1), 1.0)
        np.testing.assert_allclose(p[0], [0, 1 / 3, 1 / 3, 1 / 3])

    def test_zero_degree_row(self):
        """Isolated nodes get zero rows and zero inverse degree."""
        g = Graph.from_edges(3, [(0, 1)])
        assert inverse_degrees(g)[2] == 0.0
        assert transition(g).toarray()[2].sum() == 0.0

    def test_adjacency_symmetric(self, karate):
        """Adjacency is symmetric with a zero diagonal."""
        a = adjacency(karate).toarray()
        np.testing.assert_array_equal(a, a.T)
        assert np.trace(a) == 0
        assert a.sum() == karate.volume

    def test_has_edges(self, p3):
        """Membership works regardless of pair orientation."""
        mask = p3.has_edges(np.array([[1, 0], [0, 2], [2, 1]]))
        assert mask.tolist() == [True, False, True]

    def test_has_edges_empty_graph(self):
        """An edgeless graph contains no pair."""
        g = Graph.from_edges(3, [])
        assert not g.has_edges(np.array([[0, 1]])).any()

    def test_edge_subset_must_be_canonical(self):
        """EdgeSubset rejects u >= v."""
        with pytest.raises(ValueError):
            EdgeSubset(np.array([[1, 0]]), 'positive', 'train')


class TestSubgraph:
    def test_keeps_node_set(self, k3):
        """Subgraph keeps n and recomputes degrees."""
        sub = subgraph_from_edges(k3, EdgeSubset(np.array([[0, 1]]), 'positive', 'train'))
        assert sub.n == 3
        assert sub.degrees.tolist() == [1, 1, 0]
        assert sub.volume == 2

    def test_rejects_foreign_edge(self, p3):
        """Edges outside the graph raise."""
        with pytest.raises(EdgeNotInGraphError):
            subgraph_from_edges(p3, EdgeSubset(np.array([[0, 2]]), 'positive', 'train'))


class TestGraphSummary:
    def test_summary_fields(self, karate):
        """Summary reports size, density and isolated nodes."""
        summary = graph_summary(karate)
        assert summary['nodes'] == 34
        assert summary['edges'] == 78
        assert summary['isolated_nodes'] == 0
        assert summary['max_degree'] == 17
        assert summary['density'] == pytest.approx(78 / 561)
