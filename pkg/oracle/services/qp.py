"""
Discretized quadratic minimization of the energy functional.
Path: oracle/services/qp.py

J_h = Σ_j α_j·h·Σ_m |(y_{m+1} - y_m)/h + b_j·(y_m + y_{m+1})/2|². Root and
leaf values are substituted, vertex values are shared, and the remaining
unconstrained convex quadratic is solved through its normal equations.
"""
from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg

from bvp.schemas import BoundaryData, TreeTrajectory
from config.logger import logger
from errors import AppError, E
from oracle.schemas import DiscretizedInstance, OracleLadder, QPResult
from tree.schemas import TemporalTree


def discretize(tree: TemporalTree, mesh: int) -> DiscretizedInstance:
    return DiscretizedInstance(tree=tree, mesh=int(mesh))


def difference_operator(instance: DiscretizedInstance) -> tuple[sparse.csr_matrix, np.ndarray]:
    """Cell operator D (E·M rows over all nodes) and the cell weights α_j·h."""
    tree, mesh, h = instance.tree, instance.mesh, instance.h
    index = instance.node_index[1:]
    b = tree.b[1:, None]
    cells = tree.edge_count * mesh
    rows = np.arange(cells).reshape(tree.edge_count, mesh)
    left = np.broadcast_to(-1.0 / h + b / 2.0, rows.shape)
    right = np.broadcast_to(1.0 / h + b / 2.0, rows.shape)
    matrix = sparse.coo_matrix(
        (
            np.concatenate([left.ravel(), right.ravel()]),
            (np.concatenate([rows.ravel(), rows.ravel()]), np.concatenate([index[:, :-1].ravel(), index[:, 1:].ravel()])),
        ),
        shape=(cells, instance.node_count),
        dtype=np.complex128,
    ).tocsr()
    weights = np.repeat(tree.alpha[1:] * h, mesh)
    return matrix, weights


def qp_minimize(instance: DiscretizedInstance, data: BoundaryData) -> QPResult:
    tree = instance.tree
    diff, weights = difference_operator(instance)

    known = np.zeros(instance.node_count, dtype=bool)
    known[instance.dirichlet_vertices] = True
    values = np.zeros(instance.node_count, dtype=np.complex128)
    values[0] = data.phi0
    values[tree.leaves] = data.leaf_targets(tree)

    free_part = diff[:, ~known]
    weighted = sparse.diags(weights) @ free_part
    normal = (free_part.conj().T @ weighted).tocsc()
    rhs = -(weighted.conj().T @ (diff[:, known] @ values[known]))
    diagonal = normal.diagonal()
    if np.any(diagonal.real <= 0.0):
        raise AppError(E.ORACLE__INDEFINITE_SYSTEM, details={"M": instance.mesh, "reason": "non-positive diagonal"})
    try:
        solution = sparse_linalg.splu(normal).solve(rhs)
    except RuntimeError as exc:
        raise AppError(E.ORACLE__INDEFINITE_SYSTEM, details={"M": instance.mesh, "reason": str(exc)}) from exc
    values[~known] = solution

    cells = diff @ values
    energy = float(np.sum(weights * np.abs(cells) ** 2))
    logger.bind(M=instance.mesh, unknowns=int((~known).sum()), energy=energy).debug("oracle.qp_solved")
    return QPResult(instance=instance, grid=values[instance.node_index[1:]], energy=energy)


def richardson(coarse: float, fine: float, ratio: float = 2.0, order: int = 2) -> float:
    """Eliminate the leading h^order error term of two solves with mesh ratio ``ratio``."""
    factor = ratio**order
    return (factor * fine - coarse) / (factor - 1.0)


def qp_ladder(tree: TemporalTree, data: BoundaryData, meshes: Sequence[int]) -> OracleLadder:
    """J_h over a mesh ladder; the last two meshes are extrapolated."""
    meshes = tuple(sorted(int(m) for m in meshes))
    results = [qp_minimize(discretize(tree, m), data) for m in meshes]
    energies = tuple(r.energy for r in results)
    if len(results) >= 2:
        extrapolated = richardson(energies[-2], energies[-1], ratio=meshes[-1] / meshes[-2])
    else:
        extrapolated = energies[-1]
    logger.bind(meshes=list(meshes), energies=list(energies), extrapolated=extrapolated).info("oracle.ladder")
    return OracleLadder(meshes=meshes, energies=energies, extrapolated=extrapolated, finest=results[-1])


def compare_with_trajectory(result: QPResult, trajectory: TreeTrajectory) -> float:
    """Max-norm distance between the solved trajectory on the grid and the QP minimizer, relative to max|y|."""
    t = np.linspace(0.0, 1.0, result.instance.mesh + 1)
    y, _ = trajectory.values(t)
    return float(np.abs(y - result.grid).max() / max(np.abs(y).max(), 1e-300))
