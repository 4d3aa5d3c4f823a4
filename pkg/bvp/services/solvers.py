"""
Linear solvers for the tree problem.
Path: bvp/services/solvers.py

``solve_sparse`` factorizes the global system with SuperLU. ``solve_recursive``
eliminates subtrees leaf-to-root: every edge j reduces to an affine
Dirichlet-to-Neumann relation y_j'(0) = D_j·y_j(0) + N_j, the relations of the
children of j turn its Kirchhoff row into a Robin condition at t = 1, and a
forward sweep from y₁(0) = φ₀ recovers the coefficients. Both return the
unknowns as an (E+1, 2) array with row 0 unused.
"""
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import linalg as sparse_linalg

from bvp.schemas import BoundaryData, LinearSystem
from bvp.services.kirchhoff import kirchhoff_betas
from edge_kernel.services import endpoint_table
from errors import EXIT_TOLERANCE, AppError, E
from tree.schemas import TemporalTree

_DENSE_CONDITION_LIMIT = 4000


def _unknowns_to_coefficients(x: np.ndarray) -> np.ndarray:
    return np.vstack([np.zeros((1, 2), dtype=np.complex128), x.reshape(-1, 2)])


def condition_estimate(matrix, lu) -> float:
    """1-norm condition estimate ‖A‖₁·‖A⁻¹‖₁ (Hager/Higham via ``onenormest``)."""
    norm = sparse_linalg.norm(matrix, 1)
    inverse = sparse_linalg.LinearOperator(
        matrix.shape,
        matvec=lambda v: lu.solve(np.asarray(v, dtype=np.complex128)),
        rmatvec=lambda v: lu.solve(np.asarray(v, dtype=np.complex128), trans="H"),
        dtype=np.complex128,
    )
    try:
        return float(norm * sparse_linalg.onenormest(inverse))
    except (ValueError, TypeError, RuntimeError):
        if matrix.shape[0] <= _DENSE_CONDITION_LIMIT:
            return float(np.linalg.cond(matrix.toarray(), 1))
        return float("nan")


def solve_sparse(system: LinearSystem, order: Optional[Sequence[int]] = None) -> tuple[np.ndarray, float]:
    """Sparse LU solve; ``order`` relabels edges (rows and columns) before factorizing."""
    matrix, rhs = system.matrix, system.rhs
    index = None
    if order is not None:
        blocks = np.asarray(order, dtype=np.int64) - 1
        index = np.stack([2 * blocks, 2 * blocks + 1], axis=1).ravel()
        matrix = matrix[index][:, index].tocsc()
        rhs = rhs[index]
    try:
        lu = sparse_linalg.splu(matrix)
    except RuntimeError as exc:
        raise AppError(
            E.BVP__SINGULAR_SYSTEM,
            exit_code=EXIT_TOLERANCE,
            details={"condition_estimate": float("inf"), "reason": str(exc)},
        ) from exc
    x = lu.solve(rhs)
    condition = condition_estimate(matrix, lu)
    if not np.all(np.isfinite(x)):
        raise AppError(E.BVP__SINGULAR_SYSTEM, exit_code=EXIT_TOLERANCE, details={"condition_estimate": condition})
    if index is not None:
        unpermuted = np.empty_like(x)
        unpermuted[index] = x
        x = unpermuted
    return _unknowns_to_coefficients(x), condition


def _solve_2x2(matrices: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    return np.linalg.solve(matrices, rhs[..., None])[..., 0]


def solve_recursive(
    tree: TemporalTree, data: BoundaryData, generic: np.ndarray
) -> tuple[np.ndarray, float]:
    """Leaf-to-root elimination in O(E); the condition is the worst local 2×2 one."""
    count = tree.edge_count
    table = endpoint_table(tree.b[1:], generic[1:])
    beta = kirchhoff_betas(tree)
    targets = np.zeros(count + 1, dtype=np.complex128)
    targets[tree.leaves] = data.leaf_targets(tree)

    gain = np.zeros((count + 1, 2), dtype=np.complex128)
    offset = np.zeros((count + 1, 2), dtype=np.complex128)
    d_bar = np.zeros(count + 1, dtype=np.complex128)
    n_bar = np.zeros(count + 1, dtype=np.complex128)
    condition = 1.0

    for level in range(tree.horizon, 0, -1):
        edges = tree.edges_at_depth(level)
        e = edges - 1
        leaf = ~tree.is_interior[edges]
        matrices = np.empty((len(edges), 2, 2), dtype=np.complex128)
        matrices[:, 0, :] = table.value0[e]
        robin = table.slope1[e] + (beta[edges] - d_bar[edges])[:, None] * table.value1[e]
        matrices[:, 1, :] = np.where(leaf[:, None], table.value1[e], robin)
        second = np.where(leaf, targets[edges], n_bar[edges])

        det = matrices[:, 0, 0] * matrices[:, 1, 1] - matrices[:, 0, 1] * matrices[:, 1, 0]
        bad = ~np.isfinite(det) | (det == 0)
        if np.any(bad):
            raise AppError(
                E.BVP__SINGULAR_SYSTEM,
                exit_code=EXIT_TOLERANCE,
                details={"edges": edges[bad].tolist(), "condition_estimate": float("inf")},
            )
        condition = max(condition, float(np.max(np.linalg.cond(matrices))))

        unit = np.zeros((len(edges), 2), dtype=np.complex128)
        unit[:, 0] = 1.0
        gain[edges] = _solve_2x2(matrices, unit)
        rhs = np.zeros((len(edges), 2), dtype=np.complex128)
        rhs[:, 1] = second
        offset[edges] = _solve_2x2(matrices, rhs)

        dtn_gain = np.sum(table.slope0[e] * gain[edges], axis=1)
        dtn_offset = np.sum(table.slope0[e] * offset[edges], axis=1)
        if level > 1:
            parents = tree.parent[edges]
            np.add.at(d_bar, parents, tree.p_tilde[edges] * dtn_gain)
            np.add.at(n_bar, parents, tree.p_tilde[edges] * dtn_offset)

    coefficients = np.zeros((count + 1, 2), dtype=np.complex128)
    start = np.zeros(count + 1, dtype=np.complex128)
    start[1] = data.phi0
    for level in range(1, tree.horizon + 1):
        edges = tree.edges_at_depth(level)
        if level > 1:
            parents = tree.parent[edges]
            start[edges] = np.sum(table.value1[parents - 1] * coefficients[parents], axis=1)
        coefficients[edges] = start[edges, None] * gain[edges] + offset[edges]
    return coefficients, condition
