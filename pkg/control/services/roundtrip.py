"""
Forward integration of the Cauchy problem y' + b·y = u from the extracted controls.
Path: control/services/roundtrip.py

Per edge, variation of constants gives
    y(t) = e^{-bt}·[y(0) + A·∫₀ᵗ e^{(b+λ)s} ds]   for u(t) = A·e^{λt},
and the integral is t·m₀((b+λ)t). Starting values come from the root value
φ₀ and the computed end values of the parent edges, never from the solved
trajectory.
"""
from typing import Optional

import numpy as np

from config.settings import settings
from control.schemas import ControlFamily, RoundTripReport
from edge_kernel.moments import exp_moments


def forward_values(family: ControlFamily, t) -> np.ndarray:
    """y of every edge at local times ``t`` rebuilt from u alone, shape (E, len(t))."""
    tree = family.tree
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    grid = np.concatenate([t, [1.0]])
    b = tree.b[1:]
    z = b + family.rate[1:]
    with np.errstate(over="ignore", invalid="ignore"):
        integral = grid[None, :] * exp_moments(0, z[:, None] * grid[None, :])[..., 0]
        decay = np.exp(-b[:, None] * grid[None, :])

    start = np.zeros(tree.edge_count + 1, dtype=np.complex128)
    start[1] = family.trajectory.data.phi0
    values = np.zeros((tree.edge_count, grid.size), dtype=np.complex128)
    for level in range(1, tree.horizon + 1):
        edges = tree.edges_at_depth(level)
        if level > 1:
            start[edges] = values[tree.parent[edges] - 1, -1]
        e = edges - 1
        values[e] = decay[e] * (start[edges, None] + family.amplitude[edges, None] * integral[e])
    return values[:, :-1]


def forward_integrate(family: ControlFamily, *, samples: int = 21, tol: Optional[float] = None) -> RoundTripReport:
    """Compare the forward-integrated trajectory with the solved one."""
    tol = settings.ROUNDTRIP_TOL if tol is None else tol
    t = np.linspace(0.0, 1.0, samples)
    rebuilt = forward_values(family, t)
    solved, _ = family.trajectory.values(t)
    deviation = float(np.abs(rebuilt - solved).max(initial=0.0))
    return RoundTripReport(max_deviation=deviation, bound=tol * max(1.0, family.trajectory.scale))
