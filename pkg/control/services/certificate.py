"""
Optimality certificate for the control family.
Path: control/services/certificate.py

Admissible perturbations are z_j(t) = w_{k_j}(1-t) + w_j·t + r_j·t²(1-t)²
with random complex vertex values w (zero at the root and at the leaves) and
random bump amplitudes r. They satisfy the homogeneous root, continuity and
leaf conditions exactly, so an optimal y must give ⟨u, ℓz⟩₀ = 0 and
J(y + z) ≥ J(y).
"""
from dataclasses import replace
from typing import Optional

import numpy as np

from bvp.schemas import TreeTrajectory
from bvp.services import assemble
from config.logger import logger
from config.settings import settings
from control.schemas import CertificateReport, ControlFamily
from control.services.sampling import rng_for
from edge_kernel.moments import exp_moments

# ∫₀¹ t^{a+c} dt
_HILBERT = 1.0 / (np.arange(5)[:, None] + np.arange(5)[None, :] + 1.0)


def _perturbation_l(tree, rng, magnitude: float) -> np.ndarray:
    """Coefficients (E, 5) of ℓz_j as polynomials in t."""
    count = tree.edge_count
    w = magnitude * (rng.standard_normal(count + 1) + 1j * rng.standard_normal(count + 1))
    w[0] = 0.0
    w[tree.leaves] = 0.0
    r = magnitude * (rng.standard_normal(count) + 1j * rng.standard_normal(count))
    start = w[tree.parent[1:]]
    end = w[1:]
    z = np.stack([start, end - start, r, -2.0 * r, r], axis=1)
    dz = np.stack([z[:, 1], 2.0 * z[:, 2], 3.0 * z[:, 3], 4.0 * z[:, 4], np.zeros(count)], axis=1)
    return dz + tree.b[1:, None] * z


def optimality_certificate(
    family: ControlFamily,
    trajectory: Optional[TreeTrajectory] = None,
    *,
    trials: int = 100,
    seed: int = 0,
    first_order_tol: Optional[float] = None,
    descent_tol: Optional[float] = None,
) -> CertificateReport:
    first_order_tol = settings.CERTIFICATE_FIRST_ORDER_TOL if first_order_tol is None else first_order_tol
    descent_tol = settings.CERTIFICATE_DESCENT_TOL if descent_tol is None else descent_tol
    trajectory = trajectory or family.trajectory
    tree = trajectory.tree
    alpha = tree.alpha[1:]
    scale = trajectory.scale
    magnitude = max(scale, 1.0)

    moments = exp_moments(4, family.rate[1:])
    amplitude = family.amplitude[1:]
    energy = family.energy
    u_norm = np.sqrt(energy)
    rng = rng_for(seed)

    max_first, max_ratio, min_descent = 0.0, 0.0, np.inf
    first_ok = True
    for _ in range(trials):
        q = _perturbation_l(tree, rng, magnitude)
        cross = amplitude * np.sum(np.conj(q) * moments, axis=1)
        lz_sq = np.einsum("na,ac,nc->n", q, _HILBERT, np.conj(q)).real
        inner = complex(np.sum(alpha * cross))
        lz_norm = float(np.sqrt(np.sum(alpha * lz_sq)))
        perturbed = float(np.sum(alpha * (family.edge_energies[1:] + 2.0 * cross.real + lz_sq)))
        descent = perturbed - energy

        bound = first_order_tol * u_norm * lz_norm
        first_ok = first_ok and abs(inner) <= bound
        max_first = max(max_first, abs(inner))
        if u_norm > 0 and lz_norm > 0:
            max_ratio = max(max_ratio, abs(inner) / (u_norm * lz_norm))
        min_descent = min(min_descent, descent)

    descent_bound = -descent_tol * scale**2
    report = CertificateReport(
        trials=trials,
        seed=seed,
        feasible=trajectory.diagnostics.passed,
        max_first_order=max_first,
        first_order_bound=first_order_tol,
        max_first_order_ratio=max_ratio,
        min_descent=float(min_descent) if trials else 0.0,
        descent_bound=descent_bound,
        first_order_ok=first_ok,
        descent_ok=trials == 0 or min_descent >= descent_bound,
    )
    logger.bind(**report.as_dict()).info("control.certificate")
    return report


def corrupt_trajectory(trajectory: TreeTrajectory, delta: complex = 1e-3) -> TreeTrajectory:
    """Copy of ``trajectory`` with every c₂ shifted by ``delta`` and fresh residual diagnostics."""
    coefficients = np.array(trajectory.coefficients)
    coefficients[1:, 1] += delta
    system = assemble(trajectory.tree, trajectory.data)
    diagnostics = replace(
        trajectory.diagnostics,
        residuals=system.residuals(coefficients[1:].ravel()),
        metadata={**trajectory.diagnostics.metadata, "corrupted_c2": delta},
    )
    return replace(trajectory, coefficients=coefficients, diagnostics=diagnostics)
