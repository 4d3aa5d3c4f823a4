"""
Solve the tree problem and its interval special case.
Path: bvp/services/solve.py
"""
from typing import Literal, Optional, Sequence

import numpy as np

from bvp.schemas import BoundaryData, SolveDiagnostics, TreeTrajectory
from bvp.services.assembly import assemble
from bvp.services.solvers import solve_recursive, solve_sparse
from config.logger import logger
from config.settings import settings
from edge_kernel.schemas import EdgeSolution
from edge_kernel.services import make_basis, solve_two_point
from errors import EXIT_TOLERANCE, AppError, E
from tree.schemas import TemporalTree

Backend = Literal["sparse", "recursive"]


def solve(
    tree: TemporalTree,
    data: BoundaryData,
    *,
    backend: Optional[Backend] = None,
    order: Optional[Sequence[int]] = None,
    tol: Optional[float] = None,
    residual_tol: Optional[float] = None,
    check: bool = True,
) -> TreeTrajectory:
    """Unique optimal trajectory of the tree problem.

    ``order`` is an edge permutation applied to the sparse system before
    factorization (uniqueness check). With ``check`` a constraint residual
    above ``residual_tol·scale`` raises ``BVP__RESIDUAL_BREACH``.
    """
    backend = backend or settings.SOLVER_BACKEND
    residual_tol = settings.RESIDUAL_TOL if residual_tol is None else residual_tol
    system = assemble(tree, data, tol=tol)

    if backend == "sparse":
        coefficients, condition = solve_sparse(system, order)
    elif backend == "recursive":
        coefficients, condition = solve_recursive(tree, data, system.generic)
    else:
        raise AppError(E.CONFIG__INVALID, details={"backend": backend, "allowed": ["sparse", "recursive"]})

    diagnostics = SolveDiagnostics(
        backend=backend,
        residuals=system.residuals(coefficients[1:].ravel()),
        condition=condition,
        scale=data.scale(tree),
        tolerance=residual_tol,
    )
    if condition > settings.CONDITION_WARN:
        logger.bind(condition=condition, threshold=settings.CONDITION_WARN).warning("bvp.condition_warning")
    trajectory = TreeTrajectory(
        tree=tree,
        coefficients=coefficients,
        generic=system.generic,
        data=data,
        diagnostics=diagnostics,
    )
    logger.bind(
        backend=backend,
        edges=tree.edge_count,
        max_residual=diagnostics.max_residual,
        condition=condition,
    ).info("bvp.solved")
    if check and not diagnostics.passed:
        raise AppError(E.BVP__RESIDUAL_BREACH, exit_code=EXIT_TOLERANCE, details=diagnostics.as_dict())
    return trajectory


def solve_interval(
    b: complex, horizon: float, phi0: complex, phi1: complex, *, tol: Optional[float] = None
) -> EdgeSolution:
    """Closed-form solution of ℒy = 0 on [0, T] with y(0) = φ₀, y(T) = φ₁."""
    if horizon < 1:
        raise AppError(E.SPEC__INVALID, details={"horizon": horizon, "reason": "T must be at least 1"})
    return solve_two_point(make_basis(b, tol), complex(phi0), complex(phi1), length=float(horizon))


def compare_backends(tree: TemporalTree, data: BoundaryData, **kwargs) -> float:
    """Max coefficient difference between the sparse and recursive backends, relative to max(1, |c|)."""
    sparse_traj = solve(tree, data, backend="sparse", **kwargs)
    recursive_traj = solve(tree, data, backend="recursive", **kwargs)
    diff = np.abs(sparse_traj.coefficients - recursive_traj.coefficients).max()
    return float(diff / max(1.0, np.abs(sparse_traj.coefficients).max()))


def superposition_defect(tree: TemporalTree, data: BoundaryData, **kwargs) -> float:
    """|y(φ₀, ψ) - y(φ₀, 0) - y(0, ψ)| over all coefficients, relative to max(1, |c|)."""
    full = solve(tree, data, **kwargs).coefficients
    initial = solve(tree, data.scaled(1.0, 0.0), **kwargs).coefficients
    terminal = solve(tree, data.scaled(0.0, 1.0), **kwargs).coefficients
    return float(np.abs(full - initial - terminal).max() / max(1.0, np.abs(full).max()))


def interval_equivalence(trajectory: TreeTrajectory, samples: int = 11) -> Optional[float]:
    """Max |y_j(t) - y_interval(t + k - 1)| over level-k edges for constant-b trees.

    Returns ``None`` when the tree has more than one coefficient value or the
    targets are per-leaf, i.e. when the interval problem does not apply.
    """
    tree, data = trajectory.tree, trajectory.data
    b = tree.b[1:]
    if not data.is_uniform or not np.all(b == b[0]):
        return None
    interval = solve_interval(complex(b[0]), tree.horizon, data.phi0, data.phi1)
    t = np.linspace(0.0, 1.0, samples)
    y, _ = trajectory.values(t)
    shift = (tree.depth[1:] - 1)[:, None]
    expected = interval.function(t[None, :] + shift)
    return float(np.abs(y - expected).max())
