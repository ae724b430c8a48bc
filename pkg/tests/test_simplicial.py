import pytest

from localchrom.core import (
    SimplicialComplex, barycentric_subdivision, link, suspension, is_isomorphic,
    connected_components, is_cycle, skeleton_complex, betti_gf2,
)


def hollow_triangle():
    return SimplicialComplex.from_facets(["a", "b", "c"], [[0, 1], [1, 2], [0, 2]], "triangle")


def hexagon(labels=None):
    labels = labels or [str(i) for i in range(6)]
    return SimplicialComplex.from_facets(labels, [[i, (i + 1) % 6] for i in range(6)], "hexagon")


class TestSimplicialComplex:
    def test_reduces_to_maximal_facets(self):
        k = SimplicialComplex.from_facets(["a", "b", "c"], [[0, 1, 2], [0, 1], [2]])
        assert k.facets == ((0, 1, 2),)
        assert k.dim() == 2

    def test_f_vector_and_euler(self):
        k = SimplicialComplex.from_facets(["a", "b", "c", "d"], [[0, 1, 2], [2, 3]])
        assert k.f_vector().counts == (4, 4, 1)
        assert k.euler() == 1

    def test_simplices_by_dim(self):
        layers = hollow_triangle().simplices_by_dim()
        assert layers[0] == [(0,), (1,), (2,)]
        assert layers[1] == [(0, 1), (0, 2), (1, 2)]

    def test_contains(self):
        k = hollow_triangle()
        assert k.contains([0, 1])
        assert not k.contains([0, 1, 2])
        assert k.contains([])

    @pytest.mark.parametrize("labels, facets, message", [
        (["a"], [[]], "empty facet"),
        (["a"], [[0, 1]], "out of range"),
        (["a", "b"], [], "no facets"),
        (["a", "b"], [[0]], "lie in no facet"),
        (["a", "a"], [[0, 1]], "unique"),
    ])
    def test_refusals(self, labels, facets, message):
        with pytest.raises(ValueError, match=message):
            SimplicialComplex.from_facets(labels, facets)

    def test_involution_length(self):
        with pytest.raises(ValueError, match="involution"):
            SimplicialComplex.from_facets(["a", "b"], [[0], [1]], involution=[1])

    def test_z2_free(self):
        k = SimplicialComplex.from_facets(["+", "-"], [[0], [1]], involution=[1, 0])
        z2 = k.z2()
        assert z2.is_valid and z2.is_free

    def test_z2_not_free(self):
        k = SimplicialComplex.from_facets(["+", "-"], [[0, 1]], involution=[1, 0])
        assert k.z2().is_valid and not k.z2().is_free

    def test_z2_invalid(self):
        k = SimplicialComplex.from_facets(["a", "b", "c"], [[0, 1], [2]], involution=[2, 1, 0])
        assert not k.z2().is_valid

    def test_no_involution(self):
        assert hollow_triangle().z2() is None

    def test_labelled_facets(self):
        assert hollow_triangle().labelled_facets() == frozenset(
            {frozenset({"a", "b"}), frozenset({"b", "c"}), frozenset({"a", "c"})})


class TestOperations:
    def test_subdivision_of_triangle(self):
        sd = barycentric_subdivision(hollow_triangle())
        assert sd.f_vector().counts == (6, 6)
        assert is_cycle(sd)

    def test_subdivision_keeps_involution(self):
        k = SimplicialComplex.from_facets(["+1", "+2", "-1", "-2"], [[0, 1], [1, 2], [2, 3], [3, 0]],
                                          involution=[2, 3, 0, 1])
        sd = barycentric_subdivision(k)
        assert sd.z2().is_valid and sd.z2().is_free

    def test_subdivision_budget(self):
        with pytest.raises(ValueError, match="budget"):
            barycentric_subdivision(SimplicialComplex.from_facets("abcd", [[0, 1, 2, 3]]), budget=10)

    def test_link(self):
        lk = link(hollow_triangle(), 0)
        assert sorted(lk.labels) == ["b", "c"]
        assert betti_gf2(lk, reduced=True).values == (1,)

    def test_link_of_isolated_vertex_is_empty(self):
        k = SimplicialComplex.from_facets(["a", "b", "c"], [[0, 1], [2]])
        assert link(k, 2).is_empty()

    def test_suspension_of_circle(self):
        s = suspension(hollow_triangle())
        assert s.f_vector().counts == (5, 9, 6)
        assert betti_gf2(s, reduced=True).values == (0, 0, 1)

    def test_isomorphism(self):
        shuffled = SimplicialComplex.from_facets(list("uvwxyz"), [[0, 2], [2, 4], [4, 1], [1, 3], [3, 5], [5, 0]])
        mapping = is_isomorphic(hexagon(), shuffled)
        assert mapping is not None
        for f in hexagon().facets:
            assert shuffled.contains(mapping[v] for v in f)

    def test_not_isomorphic(self):
        two_triangles = SimplicialComplex.from_facets(list("abcdef"), [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
        assert is_isomorphic(hexagon(), two_triangles) is None

    def test_isomorphism_limit(self):
        with pytest.raises(ValueError, match="limited to 5"):
            is_isomorphic(hexagon(), hexagon(), limit=5)

    def test_components_and_cycles(self):
        two_triangles = SimplicialComplex.from_facets(list("abcdef"), [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]])
        assert connected_components(two_triangles) == [[0, 1, 2], [3, 4, 5]]
        assert not is_cycle(two_triangles)
        assert is_cycle(hexagon())
        assert not is_cycle(SimplicialComplex.from_facets("abc", [[0, 1, 2]]))

    def test_skeleton_complex(self):
        k = skeleton_complex(4, 2)
        assert k.f_vector().counts == (4, 6)
        with pytest.raises(ValueError):
            skeleton_complex(3, 0)
