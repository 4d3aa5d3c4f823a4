"""
Closed-form control family u_j = ℓ_j y_j.
Path: control/schemas/_family.py
"""
from dataclasses import dataclass

import numpy as np

from bvp.schemas import TreeTrajectory
from edge_kernel.schemas import PolyExp
from tree.schemas import TemporalTree


@dataclass(frozen=True, eq=False)
class ControlFamily:
    """u_j(t) = amplitude_j·e^{rate_j·t}; arrays have length E+1 with slot 0 unused."""

    trajectory: TreeTrajectory
    amplitude: np.ndarray
    rate: np.ndarray
    edge_energies: np.ndarray

    def __post_init__(self):
        for name in ("amplitude", "rate", "edge_energies"):
            getattr(self, name).setflags(write=False)

    @property
    def tree(self) -> TemporalTree:
        return self.trajectory.tree

    @property
    def energy(self) -> float:
        """J = Σ α_j ∫|u_j|²."""
        return float(np.sum(self.tree.alpha[1:] * self.edge_energies[1:]))

    def control(self, j: int) -> PolyExp:
        return PolyExp.single([self.amplitude[j]], self.rate[j])

    def values(self, t) -> np.ndarray:
        """u of every edge at local times ``t``, shape (E, len(t))."""
        t = np.atleast_1d(np.asarray(t, dtype=np.float64))
        with np.errstate(over="ignore", invalid="ignore"):
            return self.amplitude[1:, None] * np.exp(self.rate[1:, None] * t[None, :])
