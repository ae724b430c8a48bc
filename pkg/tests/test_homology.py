import numpy as np
import pytest

from localchrom.core import (
    SimplicialComplex, gf2_rank, chain_complex, cellular_chain_complex, betti_gf2, cellular_betti,
    euler_characteristic, is_gf2_homology_sphere, barycentric_subdivision, is_isomorphic,
    bounded_cross_complex, truncated_hom_complex, box_complex, complete_graph,
)


def hexagon():
    return SimplicialComplex.from_facets([str(i) for i in range(6)], [[i, (i + 1) % 6] for i in range(6)])


def dense_boundary(chains, d):
    rows, cols = len(chains.bases[d - 1]), len(chains.bases[d])
    out = np.zeros((rows, cols), dtype=np.uint8)
    for j, column in enumerate(chains.boundaries[d]):
        for i in range(rows):
            out[i, j] = (column >> i) & 1
    return out


def boundary_of_simplex(d):
    """Boundary of the (d+1)-simplex: a d-sphere."""
    vertices = list(range(d + 2))
    return SimplicialComplex.from_facets([str(v) for v in vertices],
                                         [[u for u in vertices if u != v] for v in vertices])


class TestRank:
    def test_gf2_rank(self):
        assert gf2_rank([0b011, 0b110, 0b101]) == 2
        assert gf2_rank([0b001, 0b010, 0b100]) == 3
        assert gf2_rank([]) == 0
        assert gf2_rank([0, 0]) == 0

    def test_rank_matches_numpy_elimination(self):
        chains = chain_complex(boundary_of_simplex(3))
        for d in range(1, chains.top + 1):
            m = dense_boundary(chains, d)
            rank = 0
            rows, cols = m.shape
            for c in range(cols):
                pivot = next((r for r in range(rank, rows) if m[r, c]), None)
                if pivot is None:
                    continue
                m[[rank, pivot]] = m[[pivot, rank]]
                for r in range(rows):
                    if r != rank and m[r, c]:
                        m[r] ^= m[rank]
                rank += 1
            assert chains.rank(d) == rank

    def test_boundary_squared(self):
        chains = chain_complex(boundary_of_simplex(2))
        assert chains.check_boundary_squared()
        product = dense_boundary(chains, 1).astype(int) @ dense_boundary(chains, 2).astype(int)
        assert not np.any(product % 2)


class TestBetti:
    def test_circle(self):
        assert betti_gf2(hexagon()).values == (1, 1)
        assert betti_gf2(hexagon(), reduced=True).values == (0, 1)

    def test_two_points(self):
        k = SimplicialComplex.from_facets(["a", "b"], [[0], [1]])
        assert betti_gf2(k).values == (2,)
        assert betti_gf2(k, reduced=True).values == (1,)

    @pytest.mark.parametrize("d", [0, 1, 2, 3])
    def test_spheres(self, d):
        k = boundary_of_simplex(d)
        assert is_gf2_homology_sphere(k, d)
        assert not is_gf2_homology_sphere(k, d + 1)

    def test_empty_complex(self):
        assert betti_gf2(SimplicialComplex.empty()).values == ()

    def test_subdivision_invariance(self):
        for k in (hexagon(), boundary_of_simplex(2), bounded_cross_complex(3, 2)):
            assert betti_gf2(barycentric_subdivision(k)).values == betti_gf2(k).values

    def test_isomorphism_invariance(self):
        k = bounded_cross_complex(3, 2)
        assert is_isomorphic(k, hexagon()) is not None
        assert betti_gf2(k).values == betti_gf2(hexagon()).values

    def test_euler_matches_alternating_betti(self):
        for k in (hexagon(), boundary_of_simplex(3), box_complex(complete_graph(3)), bounded_cross_complex(4, 2)):
            assert betti_gf2(k).euler == euler_characteristic(k)
            assert betti_gf2(k, reduced=True).euler == euler_characteristic(k)


class TestCellular:
    def test_hom_bounded_five_three(self):
        poset = truncated_hom_complex(5, 3)
        chains = cellular_chain_complex(poset)
        assert [len(b) for b in chains.bases] == [20, 60, 30]
        assert cellular_betti(poset).values == (1, 12, 1)

    def test_euler_of_poset(self):
        assert euler_characteristic(truncated_hom_complex(5, 3)) == -10
        assert euler_characteristic(truncated_hom_complex(3, 2)) == 6

    def test_order_complex_betti(self):
        poset = truncated_hom_complex(5, 3)
        assert betti_gf2(poset).values == (1, 12, 1)
        assert not is_gf2_homology_sphere(poset, 2)
