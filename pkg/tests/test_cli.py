import json

import pytest
from typer.testing import CliRunner

from localchrom.cli import app

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


def stdout_json(result):
    return json.loads(result.stdout)


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("complexes:\n  workers: 2\n", encoding="utf-8")
    return path


class TestGen:
    def test_schrijver_then_psi(self, tmp_path, config_path):
        out = tmp_path / "sg62.json"
        assert invoke("gen", "--family", "schrijver", "--n", 6, "--k", 2, "--out", out).exit_code == 0
        result = invoke("psi", out, "--config", config_path)
        assert result.exit_code == 0
        assert stdout_json(result)["psi"] == 4

    def test_psi_methods(self, tmp_path, config_path):
        out = tmp_path / "c5.json"
        invoke("gen", "--family", "cycle", "--n", 5, "--out", out)
        for method in ("direct", "partitions", "hom-universal"):
            assert stdout_json(invoke("psi", out, "--method", method, "--config", config_path))["psi"] == 3

    def test_chi_and_fchi(self, tmp_path, config_path):
        out = tmp_path / "petersen.json"
        invoke("gen", "--family", "kneser", "--n", 5, "--k", 2, "--out", out)
        assert stdout_json(invoke("chi", out, "--config", config_path))["chi"] == 3
        assert stdout_json(invoke("fchi", out, "--config", config_path))["fchi"] == "5/2"

    def test_gen_to_stdout(self):
        result = invoke("gen", "--family", "universal", "--m", 3, "--r", 2)
        assert result.exit_code == 0
        assert len(stdout_json(result)["labels"]) == 6

    def test_borsuk_seed_is_deterministic(self):
        first = invoke("gen", "--family", "borsuk", "--dim", 3, "--points", 10, "--alpha", 1.5, "--seed", 3)
        second = invoke("gen", "--family", "borsuk", "--dim", 3, "--points", 10, "--alpha", 1.5, "--seed", 3)
        assert first.stdout == second.stdout

    def test_missing_parameter(self):
        result = invoke("gen", "--family", "kneser", "--n", 5)
        assert result.exit_code == 1

    def test_unknown_family(self):
        assert invoke("gen", "--family", "petersen").exit_code == 1


class TestHom:
    def test_with_cnf(self, tmp_path, config_path):
        c5, k3 = tmp_path / "c5.json", tmp_path / "k3.json"
        cnf = tmp_path / "out" / "c5_k3.cnf"
        invoke("gen", "--family", "cycle", "--n", 5, "--out", c5)
        invoke("gen", "--family", "complete", "--m", 3, "--out", k3)
        result = invoke("hom", c5, k3, "--cnf-out", cnf, "--config", config_path)
        assert result.exit_code == 0
        assert cnf.read_text(encoding="utf-8").count("p cnf 15") == 1
        reverse = invoke("hom", k3, c5, "--config", config_path)
        assert '"exists": false' in reverse.stdout


class TestComplexCommands:
    def test_hhat_euler(self, tmp_path):
        out = tmp_path / "hhat.json"
        assert invoke("complex", "--kind", "hhat", "--m", 5, "--r", 3, "--out", out).exit_code == 0
        assert stdout_json(invoke("euler", out)) == {"euler": -10}

    def test_homology_schema(self, tmp_path, config_path):
        out = tmp_path / "l32.json"
        invoke("complex", "--kind", "lmr", "--m", 3, "--r", 2, "--out", out)
        data = stdout_json(invoke("homology", out, "--reduced", "--config", config_path))
        assert data == {"f_vector": [6, 6], "euler": 0, "betti": [0, 1], "reduced": True}

    def test_b0_needs_graph(self):
        assert invoke("complex", "--kind", "b0").exit_code == 1

    def test_b0_from_graph(self, tmp_path, config_path):
        k3, out = tmp_path / "k3.json", tmp_path / "b0.json"
        invoke("gen", "--family", "complete", "--m", 3, "--out", k3)
        assert invoke("complex", "--kind", "b0", "--graph", k3, "--out", out).exit_code == 0
        assert stdout_json(invoke("homology", out, "--reduced", "--config", config_path))["betti"] == [0, 0, 1]

    def test_bier_matches_lmr(self, tmp_path, config_path):
        bier, lmr = tmp_path / "bier.json", tmp_path / "lmr.json"
        invoke("complex", "--kind", "bier", "--m", 5, "--r", 3, "--out", bier)
        invoke("complex", "--kind", "lmr", "--m", 5, "--r", 3, "--out", lmr)
        assert stdout_json(invoke("iso", bier, lmr, "--config", config_path))["isomorphic"] is True

    def test_link(self, tmp_path):
        out = tmp_path / "l32.json"
        invoke("complex", "--kind", "lmr", "--m", 3, "--r", 2, "--out", out)
        data = stdout_json(invoke("link", out, "--vertex", "+1"))
        assert sorted(data["vertices"]) == ["-2", "-3"]

    def test_poset_link(self, tmp_path):
        out = tmp_path / "hhat.json"
        invoke("complex", "--kind", "hhat", "--m", 5, "--r", 3, "--out", out)
        result = invoke("link", out, "--vertex", "{4}|{5}")
        assert result.exit_code == 0
        assert len(stdout_json(result)["vertices"]) == 6

    def test_empty_link_written_to_file(self, tmp_path):
        source = tmp_path / "point_and_edge.json"
        source.write_text(json.dumps({"name": "pe", "vertices": ["0", "1", "2"], "facets": [[0], [1, 2]]}),
                          encoding="utf-8")
        out = tmp_path / "lk.json"
        result = invoke("link", source, "--vertex", "0", "--out", out)
        assert result.exit_code == 0
        assert result.stdout == ""
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["vertices"] == [] and data["facets"] == []

    def test_graph_is_not_a_complex(self, tmp_path):
        out = tmp_path / "c5.json"
        invoke("gen", "--family", "cycle", "--n", 5, "--out", out)
        assert invoke("euler", out).exit_code == 1


class TestMaps:
    @pytest.mark.parametrize("space", ["box", "hom"])
    def test_three_two(self, space, config_path):
        result = invoke("maps", "--m", 3, "--r", 2, "--space", space, "--config", config_path)
        assert result.exit_code == 0
        data = stdout_json(result)
        assert data["lift"]["simplicial"] and data["collapse"]["equivariant"]

    def test_both_spaces(self, config_path):
        result = invoke("maps", "--lemma7", "--m", 3, "--r", 2, "--config", config_path)
        assert result.exit_code == 0
        data = stdout_json(result)
        assert (data["m"], data["r"]) == (3, 2)
        for space in ("box", "hom"):
            assert set(data[space]) == {"collapse", "lift"}
            assert data[space]["collapse"]["simplicial"] and data[space]["collapse"]["equivariant"]
            assert data[space]["lift"]["simplicial"] and data[space]["lift"]["equivariant"]

    def test_unknown_space(self, config_path):
        assert invoke("maps", "--m", 3, "--r", 2, "--space", "cube", "--config", config_path).exit_code == 1


class TestUsageErrors:
    def test_unknown_option(self):
        assert invoke("maps", "--bogus").exit_code == 1

    def test_missing_required_option(self):
        assert invoke("maps", "--m", 3).exit_code == 1

    def test_bad_integer(self):
        assert invoke("gen", "--family", "cycle", "--n", "five").exit_code == 1

    def test_unknown_command(self):
        assert invoke("frobnicate").exit_code == 1

    def test_nested_group(self):
        assert invoke("verify", "paper", "--bogus").exit_code == 1


class TestVerify:
    def test_selected_claims(self, config_path):
        result = invoke("verify", "paper", "--claims", "01-hom-bounded-counts,12-bier-identity",
                        "--config", config_path)
        assert result.exit_code == 0
        assert "12-bier-identity" in result.output

    def test_unknown_claim(self, config_path):
        assert invoke("verify", "paper", "--claims", "00-nope", "--config", config_path).exit_code == 1

    @pytest.mark.slow
    def test_full_suite(self, config_path):
        result = invoke("verify", "paper", "--json", "--config", config_path)
        assert result.exit_code == 0
