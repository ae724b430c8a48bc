"""Pydantic models with basic validations"""

from pydantic import BaseModel, field_validator, ConfigDict, model_validator
from typing import Optional, Dict, Any, List
import yaml
from dotenv import main
import os

from .core import SolverConfig as SolverConfig_, ComplexConfig as ComplexConfig_
from .claims import VerifyConfig as VerifyConfig_, CLAIM_IDS


class RunConfig(BaseModel):
    log_dir: str="./logs"
    save_log: bool=False
    verbose: bool=False


class SolverConfig(BaseModel):
    node_budget: int=20_000_000
    partition_limit: int=12
    fractional_limit: int=16
    symmetry_breaking: bool=True

    @field_validator('node_budget')
    @classmethod
    def validate_node_budget(cls, v) -> int:
        return max(1_000, min(v, 10_000_000_000))

    @field_validator('partition_limit')
    @classmethod
    def validate_partition_limit(cls, v) -> int:
        return max(1, min(v, 12))

    @field_validator('fractional_limit')
    @classmethod
    def validate_fractional_limit(cls, v) -> int:
        return max(1, min(v, 20))

    def to_pipeline_config(self) -> 'SolverConfig_':
        return SolverConfig_(
            node_budget=self.node_budget,
            partition_limit=self.partition_limit,
            fractional_limit=self.fractional_limit,
            symmetry_breaking=self.symmetry_breaking
        )


class ComplexConfig(BaseModel):
    isomorphism_limit: int=40
    chain_budget: int=2_000_000
    workers: int=4

    @field_validator('isomorphism_limit')
    @classmethod
    def validate_isomorphism_limit(cls, v) -> int:
        return max(1, min(v, 40))

    @field_validator('chain_budget')
    @classmethod
    def validate_chain_budget(cls, v) -> int:
        return max(1, v)

    @field_validator('workers')
    @classmethod
    def validate_workers(cls, v) -> int:
        return max(1, min(v, 32))

    def to_pipeline_config(self) -> 'ComplexConfig_':
        return ComplexConfig_(
            isomorphism_limit=self.isomorphism_limit,
            chain_budget=self.chain_budget,
            workers=self.workers
        )


class VerifyConfig(BaseModel):
    budget: Optional[int]=None
    workers: int=4
    claims: Optional[List[str]]=None
    seed: int=0

    @field_validator('budget')
    @classmethod
    def validate_budget(cls, v) -> Optional[int]:
        if v is None:
            return v
        return max(1_000, min(v, 10_000_000_000))

    @field_validator('workers')
    @classmethod
    def validate_workers(cls, v) -> int:
        return max(1, min(v, 32))

    @field_validator('claims')
    @classmethod
    def validate_claims(cls, v) -> Optional[List[str]]:
        if not v:
            return None
        for claim_id in v:
            if claim_id not in CLAIM_IDS:
                raise ValueError(f"Unknown claim id: {claim_id}")
        return v

    def to_pipeline_config(self) -> 'VerifyConfig_':
        return VerifyConfig_(
            budget=self.budget,
            workers=self.workers,
            claims=self.claims,
            seed=self.seed
        )


class BorsukConfig(BaseModel):
    seed: int=0

    @field_validator('seed')
    @classmethod
    def validate_seed(cls, v) -> int:
        if v < 0:
            raise ValueError(f"Seed must be nonnegative, got {v}")
        return v


class MainConfig(BaseModel):
    model_config = ConfigDict(extra='forbid') # prevent unknown fields

    run: RunConfig=RunConfig()
    solver: SolverConfig=SolverConfig()
    complexes: ComplexConfig=ComplexConfig()
    verify: VerifyConfig=VerifyConfig()
    borsuk: BorsukConfig=BorsukConfig()
    """Every section is optional; missing sections use their defaults."""

    @model_validator(mode="before")
    @classmethod
    def resolve_references(cls, data: Any) -> Any:
        if isinstance(data, dict):
            return cls._resolve_references(data)
        return data

    @model_validator(mode="after")
    def validate_verify_budget(self) -> 'MainConfig':
        if self.verify.budget is not None and self.verify.budget > self.solver.node_budget * 100:
            raise ValueError(f"verify.budget {self.verify.budget} is more than 100x solver.node_budget; raise solver.node_budget instead")
        return self

    @classmethod
    def from_yaml(cls, path: str) -> 'MainConfig':
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
        return cls(**(data or {}))

    @staticmethod
    def _convert_env_value(value: str) -> Any:
        """Strip quotes, then read ints and booleans; anything else stays a string."""
        if not isinstance(value, str):
            return value
        if (value.startswith('"') and value.endswith('"')) or \
           (value.startswith("'") and value.endswith("'")):
            value = value[1:-1]
        if value.lower() in ('true', 'yes', 'on'):
            return True
        if value.lower() in ('false', 'no', 'off'):
            return False
        try:
            return int(value)
        except ValueError:
            return value

    @staticmethod
    def _resolve_references(data: Dict[str,Any]) -> Dict[str, Any]:
        """
        Recursively resolve 'file:path' and 'env:variable' references.
        A 'file:' value is read as YAML, so claim lists can live in their own file.
        """
        main.load_dotenv() # load .env file
        if isinstance(data, dict):
            result = {}
            for key, value in data.items():
                if isinstance(value, str) and value.startswith('file:'):
                    filepath = value[5:]
                    try:
                        with open(filepath, 'r', encoding='utf-8') as f:
                            result[key] = yaml.safe_load(f)
                    except Exception as e:
                        raise ValueError(f"Failed to load file '{filepath}'. Reason: {e}")
                elif isinstance(value, str) and value.startswith('env:'):
                    envname = value[4:]
                    value = os.getenv(envname)
                    if value is None:
                        raise ValueError(f"Environment variable '{envname}' is not set or is empty. Please check your .env file or environment variables.")
                    else:
                        result[key] = MainConfig._convert_env_value(value)
                else:
                    result[key] = MainConfig._resolve_references(value)
            return result
        elif isinstance(data, list):
            return [MainConfig._resolve_references(item) for item in data]
        else:
            return data

    def get_pipeline_configs(self) -> Dict[str, Any]:
        """Convert all configs to pipeline dataclasses"""
        solver = self.solver.to_pipeline_config()
        if self.verify.budget is not None:
            verify_solver = SolverConfig_(**{**solver.__dict__, "node_budget": self.verify.budget})
        else:
            verify_solver = solver
        return {
            "log_dir": self.run.log_dir,
            "save_log": self.run.save_log,
            "verbose": self.run.verbose,
            "solver": solver,
            "verify_solver": verify_solver,
            "complexes": self.complexes.to_pipeline_config(),
            "verify": self.verify.to_pipeline_config(),
            "seed": self.borsuk.seed
        }
