"""
Run configuration files.
Path: cli/schemas/_config.py

A run config is a single YAML or JSON file holding the process fields (see
``ProcessSpec``), an optional truncation, a seed and one section per command.
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from process_model.schemas import ProcessSpec, TruncationPolicy
from utils.validators import ComplexValue


class _Section(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SolveOptions(_Section):
    samples_per_edge: int = Field(default=11, ge=2, description="Uniform grid density of trajectory.csv.")
    backend: Optional[Literal["sparse", "recursive"]] = Field(default=None, description="Overrides TTC_SOLVER_BACKEND.")
    apriori_samples: int = Field(default=100, ge=1, description="Random boundary pairs of the a priori sweep.")
    fixture: Optional[Path] = Field(default=None, description="Oracle fixture to compare J against.")
    fixture_tol: float = Field(default=1e-4, gt=0.0)


class PlaybackOptions(_Section):
    branch_choices: Optional[list[int]] = Field(default=None, description="Explicit l_1..l_{T-1}; sampled when omitted.")
    samples_per_edge: int = Field(default=101, ge=2)


class VerifyOptions(_Section):
    trials: int = Field(default=100, ge=1, description="Random perturbations of the optimality certificate.")
    meshes: list[int] = Field(default_factory=lambda: [50, 100, 200], description="Operator-matrix meshes M.")
    apriori_samples: int = Field(default=100, ge=1)
    corrupt_c2: Optional[ComplexValue] = Field(default=None, description="Negative control: shift every c₂.")
    operator_node_limit: int = Field(default=20_000, ge=1, description="Skip operator checks above this many nodes.")
    exhaustive_leaf_limit: int = Field(default=10_000, ge=1)


class ConvergeOptions(_Section):
    K_list: list[int] = Field(default_factory=lambda: [1, 2, 4, 8], min_length=1)

    @field_validator("K_list")
    @classmethod
    def _positive(cls, value: list[int]) -> list[int]:
        if any(k < 1 for k in value):
            raise ValueError("K values must be at least 1")
        return value


class OracleOptions(_Section):
    meshes: list[int] = Field(default_factory=lambda: [250, 500, 1000], min_length=1)


class RunConfig(ProcessSpec):
    """Process fields plus truncation, seed and per-command sections."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    truncation: Optional[TruncationPolicy] = None
    seed: Optional[int] = Field(default=None, ge=0)
    output_format: Literal["csv", "xlsx"] = "csv"
    solve: SolveOptions = Field(default_factory=SolveOptions)
    playback: PlaybackOptions = Field(default_factory=PlaybackOptions)
    verify: VerifyOptions = Field(default_factory=VerifyOptions)
    converge: ConvergeOptions = Field(default_factory=ConvergeOptions)
    oracle: OracleOptions = Field(default_factory=OracleOptions)

    def process_spec(self) -> ProcessSpec:
        return ProcessSpec.model_validate(self.model_dump(include=set(ProcessSpec.model_fields)))
