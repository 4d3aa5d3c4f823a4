"""
Solved trajectory on the temporal tree.
Path: bvp/schemas/_trajectory.py
"""
from dataclasses import dataclass, field

import numpy as np

from bvp.schemas._data import BoundaryData
from edge_kernel.schemas import BasisKind, EdgeBasis, EdgeSolution
from edge_kernel.services import basis_values
from errors import AppError, E
from tree.schemas import TemporalTree


@dataclass(frozen=True)
class SolveDiagnostics:
    backend: str
    residuals: dict[str, float]
    condition: float
    scale: float
    tolerance: float
    metadata: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance * self.scale

    def as_dict(self) -> dict:
        return {
            "backend": self.backend,
            "residuals": dict(self.residuals),
            "max_residual": self.max_residual,
            "condition_estimate": self.condition,
            "scale": self.scale,
            "tolerance": self.tolerance,
            "passed": self.passed,
            **self.metadata,
        }


@dataclass(frozen=True, eq=False)
class TreeTrajectory:
    """One EdgeSolution per edge, stored as a coefficient array of shape (E+1, 2)."""

    tree: TemporalTree
    coefficients: np.ndarray
    generic: np.ndarray
    data: BoundaryData
    diagnostics: SolveDiagnostics

    def __post_init__(self):
        self.coefficients.setflags(write=False)
        self.generic.setflags(write=False)

    def basis(self, j: int) -> EdgeBasis:
        kind = BasisKind.GENERIC if self.generic[j] else BasisKind.DEGENERATE
        return EdgeBasis(kind=kind, b=complex(self.tree.b[j]))

    def edge(self, j: int) -> EdgeSolution:
        if not 1 <= j <= self.tree.edge_count:
            raise AppError(E.TREE__EDGE_OUT_OF_RANGE, details={"edge": j, "edge_count": self.tree.edge_count})
        c1, c2 = self.coefficients[j]
        return EdgeSolution(basis=self.basis(j), c1=complex(c1), c2=complex(c2))

    @property
    def edges(self) -> dict[int, EdgeSolution]:
        return {int(j): self.edge(int(j)) for j in self.tree.edges}

    def values(self, t) -> tuple[np.ndarray, np.ndarray]:
        """y and y' of every edge at local times ``t``; arrays of shape (E, len(t))."""
        t = np.atleast_1d(np.asarray(t, dtype=np.float64))
        b = self.tree.b[1:, None]
        f, df = basis_values(b, self.generic[1:, None], t[None, :])
        c = self.coefficients[1:, None, :]
        return np.sum(c * f, axis=-1), np.sum(c * df, axis=-1)

    @property
    def scale(self) -> float:
        return self.diagnostics.scale
