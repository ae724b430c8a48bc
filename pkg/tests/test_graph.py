import networkx as nx
import pytest

from localchrom.core import (
    Graph, Coloring, HomomorphismMap, HomomorphismResult, BUDGET, SOLVED, INFEASIBLE,
    check_proper, local_colorfulness, neighborhood_color_counts, complete_graph, universal,
)


class TestGraph:
    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(["a", "b", "c"], [(0, 1), (2, 1)])
        assert g.n == 3
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.has_edge(1, 0) and g.has_edge(1, 2)
        assert not g.has_edge(0, 2)
        assert g.degree(1) == 2
        assert g.edge_count() == 2

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(["a", "b"], [(0, 0)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(["a", "b"], [(0, 2)])

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError, match="unique"):
            Graph.from_edges(["a", "a"], [])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValueError, match="not symmetric"):
            Graph(("a", "b"), (frozenset({1}), frozenset()))

    def test_index_of(self):
        g = Graph.from_edges(["x", "y"], [(0, 1)])
        assert g.index_of("y") == 1
        with pytest.raises(ValueError, match="no vertex"):
            g.index_of("z")

    def test_neighbor_masks(self):
        g = Graph.from_edges(["a", "b", "c"], [(0, 1), (0, 2)])
        assert g.neighbor_masks() == [0b110, 0b001, 0b001]

    def test_induced_subgraph(self, k4):
        sub = k4.induced_subgraph([0, 2, 3])
        assert sub.n == 3
        assert sub.edge_count() == 3
        assert sub.labels == ("1", "3", "4")

    def test_bipartite_and_edgeless(self, c5, c6, three_points):
        assert c6.is_bipartite()
        assert not c5.is_bipartite()
        assert three_points.is_edgeless()
        assert not c6.is_edgeless()

    def test_to_networkx(self, petersen):
        nxg = petersen.to_networkx()
        assert nxg.number_of_nodes() == 10
        assert nxg.number_of_edges() == 15

    def test_from_networkx_order(self):
        nxg = nx.path_graph(["x", "y", "z"])
        g = Graph.from_networkx(nxg, ["z", "y", "x"], name="path")
        assert g.labels == ("z", "y", "x")
        assert g.edges() == [(0, 1), (1, 2)]
        with pytest.raises(ValueError, match="vertex order"):
            Graph.from_networkx(nxg, ["x", "y"])

    def test_vertex_transitive_families(self, k4, c5, petersen):
        for g in (k4, c5, petersen, universal(4, 3)):
            assert g.is_vertex_transitive(), g.name

    def test_not_vertex_transitive(self, groetzsch):
        # triangle with a pendant vertex hanging off one corner
        pendant = Graph.from_edges(["a", "b", "c", "p"], [(0, 1), (1, 2), (0, 2), (0, 3)])
        assert not pendant.is_vertex_transitive()
        assert not groetzsch.is_vertex_transitive()
        # regular but not transitive: a triangle plus a disjoint hexagon has degrees 2 throughout
        mixed = Graph.from_edges([str(i) for i in range(9)],
                                 [(0, 1), (1, 2), (0, 2)] + [(3 + i, 3 + (i + 1) % 6) for i in range(6)])
        assert not mixed.is_vertex_transitive()


class TestColoring:
    def test_canonical_form(self):
        c = Coloring.of([5, 2, 5, 7])
        assert c.colors == (0, 1, 0, 2)
        assert c.palette_size == 3

    def test_equal_partitions_compare_equal(self):
        assert Coloring.of([1, 0, 1]) == Coloring.of([0, 1, 0])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Coloring.of([0, -1])

    def test_empty(self):
        assert Coloring.of([]).palette_size == 0


class TestLocalColorfulness:
    def test_check_proper_names_edge(self, c5):
        with pytest.raises(ValueError, match="edge 1-2"):
            check_proper(c5, Coloring.of([0, 0, 1, 0, 1]))

    def test_check_proper_length(self, c5):
        with pytest.raises(ValueError, match="entries"):
            check_proper(c5, Coloring.of([0, 1]))

    def test_complete_graph(self, k4):
        assert local_colorfulness(k4, Coloring.of(range(4))) == 4

    def test_cycle(self, c5):
        c = Coloring.of([0, 1, 0, 1, 2])
        assert neighborhood_color_counts(c5, c) == [2, 1, 1, 2, 2]
        assert local_colorfulness(c5, c) == 3

    def test_edgeless(self, three_points):
        assert local_colorfulness(three_points, Coloring.of([0, 0, 0])) == 1

    def test_improper_rejected(self, k4):
        with pytest.raises(ValueError, match="Improper"):
            local_colorfulness(k4, Coloring.of([0, 0, 1, 2]))


class TestHomomorphismMap:
    def test_verify(self, c6):
        k2 = complete_graph(2)
        assert HomomorphismMap((0, 1, 0, 1, 0, 1)).verify(c6, k2)
        assert not HomomorphismMap((0, 0, 1, 0, 1, 0)).verify(c6, k2)
        assert not HomomorphismMap((0, 1)).verify(c6, k2)

    def test_result_exists(self):
        assert HomomorphismResult(None, BUDGET).exists is None
        assert HomomorphismResult(None, INFEASIBLE).exists is False
        assert HomomorphismResult(HomomorphismMap(()), SOLVED).exists is True
