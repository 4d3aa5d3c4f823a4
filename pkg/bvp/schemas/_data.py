"""
Boundary data of the tree problem.
Path: bvp/schemas/_data.py
"""
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from errors import AppError, E
from process_model.schemas import ProcessSpec
from tree.schemas import TemporalTree
from utils.validators import ComplexValue


class BoundaryData(BaseModel):
    """Initial state φ₀ and the terminal targets: uniform φ₁ or per-leaf ψ_j."""

    model_config = ConfigDict(frozen=True)

    phi0: ComplexValue = Field(default=0.0, description="y₁(0).")
    phi1: Optional[ComplexValue] = Field(default=None, description="Uniform terminal value y_j(1) at every leaf.")
    psi: Optional[tuple[ComplexValue, ...]] = Field(default=None, description="Per-leaf targets in leaf order.")

    @model_validator(mode="after")
    def _one_target_kind(self) -> "BoundaryData":
        if (self.phi1 is None) == (self.psi is None):
            raise ValueError("exactly one of phi1 and psi must be given")
        return self

    @classmethod
    def from_spec(cls, spec: ProcessSpec) -> "BoundaryData":
        return cls(phi0=spec.phi0, phi1=spec.phi1, psi=spec.psi)

    @property
    def is_uniform(self) -> bool:
        return self.psi is None

    @property
    def sup_target(self) -> float:
        if self.psi is None:
            return abs(self.phi1)
        return max((abs(v) for v in self.psi), default=0.0)

    def leaf_targets(self, tree: TemporalTree) -> np.ndarray:
        """Targets aligned with ``tree.leaves``."""
        count = len(tree.leaves)
        if self.psi is None:
            return np.full(count, self.phi1, dtype=np.complex128)
        if len(self.psi) != count:
            raise AppError(E.BVP__TARGET_COUNT_MISMATCH, details={"targets": len(self.psi), "leaves": count})
        return np.asarray(self.psi, dtype=np.complex128)

    def scale(self, tree: TemporalTree) -> float:
        """(1 + sup|b|)·(|φ₀| + sup targets); residual tolerances are relative to it."""
        return (1.0 + tree.sup_abs_b) * (abs(self.phi0) + self.sup_target)

    def scaled(self, phi0_factor: complex, target_factor: complex) -> "BoundaryData":
        """Data with φ₀ and the targets multiplied independently (used for superposition)."""
        if self.psi is None:
            return BoundaryData(phi0=self.phi0 * phi0_factor, phi1=self.phi1 * target_factor)
        return BoundaryData(phi0=self.phi0 * phi0_factor, psi=tuple(v * target_factor for v in self.psi))

    def is_zero(self) -> bool:
        return self.phi0 == 0 and self.sup_target == 0.0
