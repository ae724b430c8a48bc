import pytest
from pydantic import ValidationError

from localchrom.config import MainConfig, SolverConfig, VerifyConfig
from localchrom.core import SolverConfig as CoreSolverConfig, ComplexConfig as CoreComplexConfig
from localchrom.claims import VerifyConfig as CoreVerifyConfig


class TestSections:
    def test_defaults(self):
        config = MainConfig()
        assert config.solver.node_budget == 20_000_000
        assert config.verify.budget is None
        assert config.borsuk.seed == 0

    def test_clamping(self):
        solver = SolverConfig(node_budget=5, partition_limit=50, fractional_limit=0)
        assert solver.node_budget == 1_000
        assert solver.partition_limit == 12
        assert solver.fractional_limit == 1

    def test_unknown_claim_rejected(self):
        with pytest.raises(ValidationError, match="Unknown claim id"):
            VerifyConfig(claims=["99-nonsense"])

    def test_empty_claim_list_means_all(self):
        assert VerifyConfig(claims=[]).claims is None

    def test_extra_fields_forbidden(self):
        with pytest.raises(ValidationError):
            MainConfig(render={"formats": ["pdf"]})

    def test_negative_seed(self):
        with pytest.raises(ValidationError, match="nonnegative"):
            MainConfig(borsuk={"seed": -1})

    def test_verify_budget_against_solver(self):
        with pytest.raises(ValidationError, match="100x"):
            MainConfig(solver={"node_budget": 1_000}, verify={"budget": 1_000_000})


class TestReferences:
    def test_env_reference(self, monkeypatch):
        monkeypatch.setenv("LOCALCHROM_TEST_BUDGET", "12345")
        monkeypatch.setenv("LOCALCHROM_TEST_FLAG", "no")
        config = MainConfig(solver={"node_budget": "env:LOCALCHROM_TEST_BUDGET",
                                    "symmetry_breaking": "env:LOCALCHROM_TEST_FLAG"})
        assert config.solver.node_budget == 12345
        assert config.solver.symmetry_breaking is False

    def test_missing_env(self, monkeypatch):
        monkeypatch.delenv("LOCALCHROM_TEST_MISSING", raising=False)
        with pytest.raises(ValidationError, match="LOCALCHROM_TEST_MISSING"):
            MainConfig(run={"log_dir": "env:LOCALCHROM_TEST_MISSING"})

    def test_file_reference(self, tmp_path):
        claims = tmp_path / "claims.yaml"
        claims.write_text("- 01-hom-bounded-counts\n- 12-bier-identity\n", encoding="utf-8")
        config = MainConfig(verify={"claims": f"file:{claims}"})
        assert config.verify.claims == ["01-hom-bounded-counts", "12-bier-identity"]

    def test_convert_env_value(self):
        assert MainConfig._convert_env_value("'7'") == 7
        assert MainConfig._convert_env_value("true") is True
        assert MainConfig._convert_env_value("./logs") == "./logs"


class TestPipelineConfigs:
    def test_from_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("solver:\n  node_budget: 50000\ncomplexes:\n  workers: 2\nverify:\n  budget: 40000\n",
                        encoding="utf-8")
        pipeline = MainConfig.from_yaml(str(path)).get_pipeline_configs()
        assert isinstance(pipeline["solver"], CoreSolverConfig)
        assert isinstance(pipeline["complexes"], CoreComplexConfig)
        assert isinstance(pipeline["verify"], CoreVerifyConfig)
        assert pipeline["solver"].node_budget == 50_000
        assert pipeline["verify_solver"].node_budget == 40_000
        assert pipeline["complexes"].workers == 2

    def test_empty_yaml(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert MainConfig.from_yaml(str(path)).run.log_dir == "./logs"
