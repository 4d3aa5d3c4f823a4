"""
Centralized configuration using pydantic-settings.
Path: config/settings/config.py

Every numerical tolerance, budget and backend switch used by the solver lives
here. Values are read from the environment with the ``TTC_`` prefix (for
example ``TTC_RESIDUAL_TOL=1e-9``) and, optionally, from an env file selected
by ``TTC_ENV``. Operations accept explicit keyword overrides and fall back to
the global ``settings`` instance when a keyword is omitted.
"""
import os
from pathlib import Path
from typing import Literal

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Define the base directory of the project (2 levels up from this file)
BASE_DIR = Path(__file__).resolve().parent.parent.parent

ENV_PREFIX = "TTC_"


def get_env_file_path() -> str:
    """
    Determine which environment file to use.

    Priority:
    1. TTC_ENV environment variable (local, test, ci)
    2. Default to 'local'
    """
    env = os.getenv(f"{ENV_PREFIX}ENV", "").lower()
    if env in ["local", "test", "ci"]:
        return str(BASE_DIR / f".env.{env}")
    return str(BASE_DIR / ".env.local")


class MainSettings(BaseSettings):
    """Solver tolerances, budgets and runtime switches."""

    model_config = SettingsConfigDict(
        env_prefix=ENV_PREFIX,
        env_file=get_env_file_path(),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    ENV: str = Field(default="local", description="Runtime environment name (local, test, ci)")

    # Process / tree
    PROB_SUM_TOL: float = Field(default=1e-12, description="Accepted defect of Σ p_l = 1 on input")
    MAX_COEFFICIENT: float = Field(
        default=700.0,
        description="Largest admissible |b|; larger values overflow e^{|b|}",
    )
    EDGE_BUDGET: int = Field(default=200_000, description="Largest tree (edge count) the solver will build")

    # Edge kernel
    BASIS_SWITCH_TOL: float = Field(
        default=1e-8,
        description="|Re b| at or below which the degenerate basis {e^{-bt}, t e^{-bt}} is used",
    )

    # Boundary value problem
    RESIDUAL_TOL: float = Field(default=1e-10, description="Constraint residual acceptance, relative to scale")
    CONDITION_WARN: float = Field(default=1e12, description="Condition estimate above which a warning is logged")
    SOLVER_BACKEND: Literal["sparse", "recursive"] = Field(
        default="sparse",
        description="Global sparse LU or leaf-to-root Dirichlet-to-Neumann elimination",
    )

    # Control certificates
    CERTIFICATE_FIRST_ORDER_TOL: float = Field(
        default=1e-8,
        description="Bound on |<u, lz>| relative to ||u|| ||lz||",
    )
    CERTIFICATE_DESCENT_TOL: float = Field(
        default=1e-10,
        description="Allowed energy decrease J(y+z)-J(y), relative to scale²",
    )
    ROUNDTRIP_TOL: float = Field(default=1e-8, description="Forward-integration round-trip tolerance")

    # Logging
    LOG_LEVEL: str = Field(default="", description="Console log level; empty picks DEBUG locally, INFO otherwise")
    LOG_DIR: str = Field(default="", description="Directory for rotating log files; empty disables them")

    @property
    def CONSOLE_LEVEL(self) -> str:
        if self.LOG_LEVEL:
            return self.LOG_LEVEL.upper()
        return "DEBUG" if self.ENV.lower() == "local" else "INFO"

    @model_validator(mode="after")
    def _validate_positive(self) -> "MainSettings":
        """Tolerances and budgets must be strictly positive."""
        for name in (
            "PROB_SUM_TOL",
            "MAX_COEFFICIENT",
            "BASIS_SWITCH_TOL",
            "RESIDUAL_TOL",
            "CONDITION_WARN",
            "CERTIFICATE_FIRST_ORDER_TOL",
            "CERTIFICATE_DESCENT_TOL",
            "ROUNDTRIP_TOL",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{ENV_PREFIX}{name} must be positive")
        if self.EDGE_BUDGET < 1:
            raise ValueError(f"{ENV_PREFIX}EDGE_BUDGET must be at least 1")
        return self

    def tolerances(self) -> dict[str, float | int | str]:
        """Snapshot of every numeric knob, echoed into run manifests."""
        return {
            name: getattr(self, name)
            for name in (
                "PROB_SUM_TOL",
                "MAX_COEFFICIENT",
                "EDGE_BUDGET",
                "BASIS_SWITCH_TOL",
                "RESIDUAL_TOL",
                "CONDITION_WARN",
                "SOLVER_BACKEND",
                "CERTIFICATE_FIRST_ORDER_TOL",
                "CERTIFICATE_DESCENT_TOL",
                "ROUNDTRIP_TOL",
            )
        }


# Create the global settings instance
settings = MainSettings()
