"""
Control extraction, energy and weighted norms.
Path: control/services/extraction.py
"""
from typing import Optional, Union

import numpy as np

from bvp.schemas import TreeTrajectory
from bvp.services import weighted_inner as trajectory_inner
from bvp.services import weighted_norm as trajectory_norm
from config.logger import logger
from control.schemas import ControlFamily
from edge_kernel.services import control_terms, edge_energy, energy_closed_form
from errors import AppError, E


def extract_controls(trajectory: TreeTrajectory) -> ControlFamily:
    """u_j = ℓ_j y_j = c₂_j·ℓf₂ on every edge, with exact edge energies."""
    tree = trajectory.tree
    factor, rate = control_terms(tree.b[1:], trajectory.generic[1:])
    amplitude = trajectory.coefficients[1:, 1] * factor
    energies = energy_closed_form(amplitude, rate)
    for e in np.flatnonzero(~np.isfinite(energies)):
        energies[e] = edge_energy(trajectory.edge(int(e) + 1))

    family = ControlFamily(
        trajectory=trajectory,
        amplitude=np.concatenate([[0j], amplitude]),
        rate=np.concatenate([[0j], rate]),
        edge_energies=np.concatenate([[0.0], energies]),
    )
    logger.bind(energy=family.energy, edges=tree.edge_count).info("control.extracted")
    return family


def weighted_norm(item: Union[TreeTrajectory, ControlFamily], s: int = 0) -> float:
    """‖·‖_s; for a control family only s = 0 exists and ‖u‖₀ = √J."""
    if isinstance(item, ControlFamily):
        if s != 0:
            raise AppError(E.KERNEL__INVALID_ORDER, details={"s": s, "allowed": [0]})
        return float(np.sqrt(item.energy))
    return trajectory_norm(item, s)


def weighted_inner(left: TreeTrajectory, right: TreeTrajectory, s: int = 0) -> complex:
    return trajectory_inner(left, right, s)


def control_balance(family: ControlFamily, *, scale: Optional[float] = None) -> float:
    """max_j |u_j(1) - Σ_{ν∈V_j} p̃_ν u_ν(0)| over interior vertices, divided by ``scale``."""
    tree = family.tree
    incoming = family.amplitude * np.exp(family.rate)
    outgoing = np.zeros(tree.edge_count + 1, dtype=np.complex128)
    children = np.arange(2, tree.edge_count + 1)
    np.add.at(outgoing, tree.parent[children], tree.p_tilde[children] * family.amplitude[children])
    defect = np.abs(incoming - outgoing)[tree.interior]
    scale = family.trajectory.scale if scale is None else scale
    return float(defect.max(initial=0.0) / max(scale, 1e-300)) if defect.size else 0.0
