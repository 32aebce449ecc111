import numpy as np
import pytest
from hypothesis import given, settings

from conftest import brute_cut_vertices, floyd_warshall, graphs
from metricdim.constructions import chain, complete, cycle, path, subdivide
from metricdim.graph import (UNREACHABLE, DisconnectedGraphError, Graph, GraphFormatError,
                             all_pairs_distances, articulation_points, edge_vertex_distance,
                             is_connected, parse_edge_list, serialize_edge_list)


class TestParse:
    def test_path(self):
        g = parse_edge_list("3 2\n0 1\n1 2")
        assert g.n == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_isolated_vertex(self):
        g = parse_edge_list("1 0")
        assert (g.n, g.m) == (1, 0)

    def test_comments_and_canonical_order(self):
        g = parse_edge_list("# triangle\n3 3\n2 1\n# mid\n0 2\n1 0\n")
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    @pytest.mark.parametrize("text, line", [
        ("3 2\n0 1\n0 1", 3),
        ("3 2\n0 1\n1 0", 3),
        ("3 1\n0 3", 2),
        ("3 1\n1 1", 2),
        ("3\n0 1", 1),
        ("a b", 1),
        ("3 1\n0 1\n1 2", 3),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphFormatError) as info:
            parse_edge_list(text)
        assert info.value.line == line

    def test_duplicate_message(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_edge_list("3 2\n0 1\n0 1")

    def test_too_few_edges(self):
        with pytest.raises(GraphFormatError, match="expected 2 edges"):
            parse_edge_list("3 2\n0 1\n")

    def test_missing_header(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("# nothing\n")


class TestSerialize:
    def test_path(self):
        assert serialize_edge_list(path(3)) == "3 2\n0 1\n1 2\n"

    def test_triangle(self):
        assert serialize_edge_list(complete(3)) == "3 3\n0 1\n0 2\n1 2\n"

    def test_single_vertex(self):
        assert serialize_edge_list(Graph.from_edges(1, [])) == "1 0\n"

    @given(graphs(max_n=10, connected=False))
    def test_round_trip(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_adjacency_matches_edges():
    g = Graph.from_edges(4, [(3, 0), (1, 2), (0, 1)])
    assert g.adjacency == ((1, 3), (0, 2), (1,), (0,))
    assert g.edge_index(3, 0) == 1


class TestDistances:
    def test_path(self):
        assert all_pairs_distances(path(3))(0, 2) == 2

    def test_k4(self):
        d = all_pairs_distances(complete(4)).array
        assert (d + np.eye(4, dtype=int) == 1).all()

    def test_subdivided_k4_originals(self):
        s, _ = subdivide(complete(4))
        oracle = floyd_warshall(s)
        d = all_pairs_distances(s)
        for i in range(4):
            for j in range(4):
                if i != j:
                    assert oracle[i][j] == 2
                    assert d(i, j) == 2

    def test_unreachable_sentinel(self):
        d = all_pairs_distances(Graph.from_edges(2, []))
        assert d.array[0, 1] == UNREACHABLE
        assert not d.connected
        with pytest.raises(DisconnectedGraphError):
            d(0, 1)

    @given(graphs(max_n=9))
    def test_against_floyd_warshall(self, g):
        oracle = floyd_warshall(g)
        d = all_pairs_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                assert d(u, v) == oracle[u][v]

    @given(graphs(max_n=9))
    def test_matrix_invariants(self, g):
        d = all_pairs_distances(g)
        a = d.array.astype(int)
        assert (a == a.T).all()
        assert (np.diag(a) == 0).all()
        off = ~np.eye(g.n, dtype=bool)
        assert (a[off] > 0).all()
        for u in range(g.n):
            for v in range(g.n):
                assert (a[u, v] == 1) == g.has_edge(u, v)
                assert (a[u] <= a[u, v] + a[v]).all()

    @given(graphs(max_n=9))
    def test_edge_endpoints_differ_by_at_most_one(self, g):
        d = all_pairs_distances(g).array.astype(int)
        for x, y in g.edges:
            assert (abs(d[x] - d[y]) <= 1).all()

    @given(graphs(min_n=2, max_n=8))
    def test_subdivision_doubles_distances(self, g):
        s, _ = subdivide(g)
        d = all_pairs_distances(g).array.astype(int)
        ds = all_pairs_distances(s).array.astype(int)
        assert (ds[: g.n, : g.n] == 2 * d).all()


class TestEdgeVertexDistance:
    def test_path(self):
        d = all_pairs_distances(path(3))
        assert edge_vertex_distance(d, 0, 2) == 1
        assert edge_vertex_distance(d, 0, 0) == 0

    def test_c5(self):
        g = cycle(5)
        oracle = floyd_warshall(g)
        e = g.edge_index(0, 1)
        expected = min(oracle[0][3], oracle[1][3])
        assert expected == 2
        assert edge_vertex_distance(all_pairs_distances(g), e, 3) == 2

    def test_edge_columns_agree(self):
        g = cycle(6)
        d = all_pairs_distances(g)
        cols = d.edge_columns()
        for e in range(g.m):
            for v in range(g.n):
                assert cols[e, v] == edge_vertex_distance(d, e, v)


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(path(3))

    def test_two_isolated(self):
        assert not is_connected(Graph.from_edges(2, []))

    def test_subdivided_k7(self):
        assert is_connected(subdivide(complete(7))[0])


class TestArticulationPoints:
    def test_path(self):
        assert articulation_points(path(3)) == {1}

    def test_cycle(self):
        assert articulation_points(cycle(5)) == set()

    def test_chain_is_two_connected(self):
        assert articulation_points(chain(4, 6).graph) == set()

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            articulation_points(Graph.from_edges(3, [(0, 1)]))

    @settings(max_examples=200)
    @given(graphs(max_n=9))
    def test_against_vertex_deletion(self, g):
        assert articulation_points(g) == brute_cut_vertices(g)
