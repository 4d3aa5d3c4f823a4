"""
Assembled linear system of the tree problem.
Path: bvp/schemas/_system.py
"""
from dataclasses import dataclass

import numpy as np
from scipy import sparse

ROW_GROUPS = ("root", "continuity", "leaf", "kirchhoff")


@dataclass(frozen=True, eq=False)
class LinearSystem:
    """Square 2E×2E complex system; unknowns (c₁_j, c₂_j) sit in columns 2(j-1), 2(j-1)+1.

    ``row_group`` labels each row with an index into ``ROW_GROUPS`` and
    ``row_vertex`` names the vertex the row belongs to (0 is the root).
    """

    matrix: sparse.csc_matrix
    rhs: np.ndarray
    row_group: np.ndarray
    row_vertex: np.ndarray
    generic: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def group_counts(self) -> dict[str, int]:
        return {name: int(np.sum(self.row_group == i)) for i, name in enumerate(ROW_GROUPS)}

    def residuals(self, unknowns: np.ndarray) -> dict[str, float]:
        """Max |A·x - rhs| per row group."""
        defect = np.abs(self.matrix @ unknowns - self.rhs)
        return {
            name: float(defect[self.row_group == i].max(initial=0.0)) for i, name in enumerate(ROW_GROUPS)
        }
