"""
Tabular export of extracted controls.
Path: control/services/export.py
"""
import numpy as np

from control.schemas import ControlFamily
from utils.export import split_complex

CONTROL_COLUMNS = (
    "edge",
    "depth",
    "alpha",
    "amplitude_re",
    "amplitude_im",
    "rate_re",
    "rate_im",
    "edge_energy",
    "t",
    "u_re",
    "u_im",
)


def control_rows(family: ControlFamily, samples_per_edge: int = 11) -> list[dict]:
    tree = family.tree
    t = np.linspace(0.0, 1.0, samples_per_edge)
    u = family.values(t)
    rows = []
    for j in tree.edges:
        fixed = {
            "edge": int(j),
            "depth": int(tree.depth[j]),
            "alpha": float(tree.alpha[j]),
            **split_complex("amplitude", family.amplitude[j]),
            **split_complex("rate", family.rate[j]),
            "edge_energy": float(family.edge_energies[j]),
        }
        for m, tm in enumerate(t):
            rows.append({**fixed, "t": float(tm), **split_complex("u", u[j - 1, m])})
    return rows
