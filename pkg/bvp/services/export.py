"""
Tabular export of solved trajectories.
Path: bvp/services/export.py
"""
import numpy as np

from bvp.schemas import TreeTrajectory
from utils.export import split_complex

TRAJECTORY_COLUMNS = (
    "edge",
    "depth",
    "alpha",
    "b_re",
    "b_im",
    "c1_re",
    "c1_im",
    "c2_re",
    "c2_im",
    "t",
    "y_re",
    "y_im",
)


def trajectory_rows(trajectory: TreeTrajectory, samples_per_edge: int = 11) -> list[dict]:
    """One row per (edge, local time) on a uniform grid of ``samples_per_edge`` points."""
    tree = trajectory.tree
    t = np.linspace(0.0, 1.0, samples_per_edge)
    y, _ = trajectory.values(t)
    rows = []
    for j in tree.edges:
        c1, c2 = trajectory.coefficients[j]
        fixed = {
            "edge": int(j),
            "depth": int(tree.depth[j]),
            "alpha": float(tree.alpha[j]),
            **split_complex("b", tree.b[j]),
            **split_complex("c1", c1),
            **split_complex("c2", c2),
        }
        for m, tm in enumerate(t):
            rows.append({**fixed, "t": float(tm), **split_complex("y", y[j - 1, m])})
    return rows
