"""
Exact α-weighted inner products and norms of tree trajectories.
Path: bvp/services/norms.py

⟨y, z⟩_s = Σ_j α_j ⟨y_j, z_j⟩_{W₂^s[0,1]} with s = 0 (L₂) or s = 1 (H¹).
"""
import numpy as np
from scipy import integrate

from bvp.schemas import TreeTrajectory
from edge_kernel.services import gram, quadratic_form
from errors import AppError, E


def _check_order(s: int) -> None:
    if s not in (0, 1):
        raise AppError(E.KERNEL__INVALID_ORDER, details={"s": s, "allowed": [0, 1]})


def _edge_inner_quad(left, right, s: int) -> complex:
    def integrand(t, part):
        y, dy = left.function(t), left.function.derivative()(t)
        z, dz = right.function(t), right.function.derivative()(t)
        value = complex(y * np.conj(z) + (dy * np.conj(dz) if s == 1 else 0.0))
        return value.real if part == 0 else value.imag

    re, _ = integrate.quad(integrand, 0.0, 1.0, args=(0,), limit=200)
    im, _ = integrate.quad(integrand, 0.0, 1.0, args=(1,), limit=200)
    return complex(re, im)


def edge_inner_products(left: TreeTrajectory, right: TreeTrajectory, s: int = 0) -> np.ndarray:
    """Unweighted per-edge ⟨y_j, z_j⟩_s, shape (E,)."""
    _check_order(s)
    if left.tree is not right.tree or not np.array_equal(left.generic, right.generic):
        raise AppError(E.INTERNAL__ERROR, details={"reason": "trajectories live on different trees"})
    tree = left.tree
    b, generic = tree.b[1:], left.generic[1:]
    g = gram(b, generic, 0)
    if s == 1:
        g = g + gram(b, generic, 1)
    with np.errstate(invalid="ignore", over="ignore"):
        values = quadratic_form(g, left.coefficients[1:], right.coefficients[1:])
    for e in np.flatnonzero(~np.isfinite(values)):
        values[e] = _edge_inner_quad(left.edge(int(e) + 1), right.edge(int(e) + 1), s)
    return values


def weighted_inner(left: TreeTrajectory, right: TreeTrajectory, s: int = 0) -> complex:
    return complex(np.sum(left.tree.alpha[1:] * edge_inner_products(left, right, s)))


def weighted_norm(trajectory: TreeTrajectory, s: int = 0) -> float:
    """‖y‖_s = √⟨y, y⟩_s."""
    return float(np.sqrt(max(weighted_inner(trajectory, trajectory, s).real, 0.0)))
