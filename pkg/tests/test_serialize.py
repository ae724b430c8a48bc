import json

import pytest

from localchrom.core import (
    load_any, load_graph, write_json, to_dict, from_dict, Graph, SimplicialComplex, CellPoset,
    universal, box_complex, truncated_hom_complex, complete_graph, find_homomorphism,
)

PENDANT_TRIANGLE = {
    "name": "pendant-triangle",
    "labels": ["a", "b", "c", "p"],
    "edges": [[0, 1], [1, 2], [0, 2], [0, 3]],
}


class TestGraphJson:
    def test_file_round_trip(self, tmp_path):
        u = universal(4, 3)
        path = write_json(u, tmp_path / "graphs" / "u43.json")
        loaded = load_graph(path)
        assert loaded.labels == u.labels
        assert loaded.edges() == u.edges()
        assert loaded.transitive

    def test_schema(self, c5):
        data = to_dict(c5)
        assert set(data) == {"name", "labels", "edges", "vertex_transitive"}
        assert data["edges"][0] == [0, 1]

    def test_bad_edges(self):
        with pytest.raises(ValueError, match="pairs"):
            from_dict({"labels": ["a", "b"], "edges": [[0, 1, 2]]})

    def test_false_transitivity_flag_rejected(self):
        with pytest.raises(ValueError, match="vertex_transitive"):
            from_dict({**PENDANT_TRIANGLE, "vertex_transitive": True})

    def test_triangle_maps_into_pendant_triangle(self):
        h = from_dict(PENDANT_TRIANGLE)
        assert not h.transitive
        assert find_homomorphism(complete_graph(3), h).exists

    def test_true_transitivity_flag_kept(self, petersen):
        loaded = from_dict({**to_dict(petersen), "vertex_transitive": True})
        assert loaded.transitive


class TestComplexJson:
    def test_involution_survives(self, tmp_path):
        b0 = box_complex(complete_graph(3))
        loaded = load_any(write_json(b0, tmp_path / "b0.json"))
        assert isinstance(loaded, SimplicialComplex)
        assert loaded.labelled_facets() == b0.labelled_facets()
        assert loaded.z2().is_free

    def test_poset(self, tmp_path):
        poset = truncated_hom_complex(4, 3)
        loaded = load_any(write_json(poset, tmp_path / "h.json"))
        assert isinstance(loaded, CellPoset)
        assert loaded.f_vector() == poset.f_vector()


class TestLoading:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ValueError, match="not found"):
            load_any(tmp_path / "nope.json")

    def test_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ValueError, match="not valid JSON"):
            load_any(path)

    def test_unknown_object(self, tmp_path):
        path = tmp_path / "x.json"
        path.write_text(json.dumps({"points": []}), encoding="utf-8")
        with pytest.raises(ValueError, match="Unrecognised"):
            load_any(path)

    def test_load_graph_rejects_complex(self, tmp_path):
        path = write_json(box_complex(complete_graph(2)), tmp_path / "b.json")
        with pytest.raises(ValueError, match="expected a graph"):
            load_graph(path)
