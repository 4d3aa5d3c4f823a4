"""
Oracle results.
Path: oracle/schemas/_results.py
"""
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from oracle.schemas._instance import DiscretizedInstance


@dataclass(frozen=True, eq=False)
class QPResult:
    """Minimizing grid function (E, M+1) and its discrete energy J_h."""

    instance: DiscretizedInstance
    grid: np.ndarray
    energy: float


@dataclass(frozen=True, eq=False)
class OracleLadder:
    meshes: tuple[int, ...]
    energies: tuple[float, ...]
    extrapolated: float
    finest: QPResult

    def as_dict(self) -> dict:
        return {
            "meshes": list(self.meshes),
            "energies": list(self.energies),
            "extrapolated_energy": self.extrapolated,
        }


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Discretized ℒ on the free nodes (A) with its α-weighted mass diagonal (W)."""

    instance: DiscretizedInstance
    matrix: sparse.csr_matrix
    weights: np.ndarray
    free_nodes: np.ndarray

    @property
    def weighted(self) -> sparse.csr_matrix:
        return sparse.diags(self.weights) @ self.matrix


@dataclass(frozen=True)
class ConvergenceRow:
    K: int
    edges: int
    energy: float
    difference: float | None
    root_control: list[complex] = field(default_factory=list)


@dataclass(frozen=True)
class ConvergenceReport:
    rows: tuple[ConvergenceRow, ...]
    sample_times: tuple[float, ...]
    flat_tol: float = 1e-12

    @property
    def differences(self) -> list[float]:
        return [r.difference for r in self.rows if r.difference is not None]

    @property
    def decreasing(self) -> bool:
        d = self.differences
        return all(later < earlier for earlier, later in zip(d, d[1:]))

    @property
    def flat(self) -> bool:
        return all(d <= self.flat_tol for d in self.differences)
