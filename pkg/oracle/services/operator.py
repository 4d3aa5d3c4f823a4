"""
Finite-difference discretization of the Euler-Lagrange operator on the tree.
Path: oracle/services/operator.py

Interior nodes of edge j use central differences for
ℒy = -y'' - 2i·Im(b)·y' + |b|²·y with mass α_j·h. A free (interior) vertex v_j
integrates ℒy over the half cells that touch it: writing ℒy = -u' + conj(b)·u
with u = y' + b·y, the vertex fluxes α_j u_j(1) and α_ν u_ν(0) cancel by the
Kirchhoff balance and only the half-cell values of u remain. The row is
divided by the vertex mass (h/2)(α_j + Σ α_ν). Root and leaf values are zero
Dirichlet data and are eliminated. W·A is Hermitian up to O(h) at vertex
rows.

The vertex rows are this half-cell balance, not one-sided three-point
differences of y' on each incident edge. On a chain with one coefficient
the row is the interior stencil with |b|² spread over its three nodes as
1/4, 1/2, 1/4; one-sided stencils would break the near symmetry of W·A.
"""
from typing import Optional

import numpy as np
from scipy import linalg, sparse
from scipy.sparse import linalg as sparse_linalg

from config.logger import logger
from oracle.schemas import DiscretizedInstance, OperatorMatrix

_DENSE_EIGEN_LIMIT = 3000


def operator_matrix(instance: DiscretizedInstance) -> OperatorMatrix:
    tree, mesh, h = instance.tree, instance.mesh, instance.h
    index = instance.node_index
    free = np.ones(instance.node_count, dtype=bool)
    free[instance.dirichlet_vertices] = False
    free_nodes = np.flatnonzero(free)
    position = np.full(instance.node_count, -1, dtype=np.int64)
    position[free_nodes] = np.arange(free_nodes.size)

    rows, cols, vals = [], [], []
    weights = np.zeros(free_nodes.size)

    def add(row_nodes, col_nodes, values):
        row_nodes, col_nodes, values = np.broadcast_arrays(row_nodes, col_nodes, values)
        keep = free[col_nodes]
        rows.append(position[row_nodes[keep]])
        cols.append(position[col_nodes[keep]])
        vals.append(values[keep])

    b = tree.b[1:, None]
    alpha = tree.alpha[1:, None]
    centre = index[1:, 1:mesh]
    lower = np.broadcast_to(-1.0 / h**2 + 1j * b.imag / h, centre.shape)
    upper = np.broadcast_to(-1.0 / h**2 - 1j * b.imag / h, centre.shape)
    diagonal = np.broadcast_to(2.0 / h**2 + np.abs(b) ** 2, centre.shape)
    add(centre, index[1:, 0 : mesh - 1], lower)
    add(centre, centre, diagonal)
    add(centre, index[1:, 2 : mesh + 1], upper)
    weights[position[centre.ravel()]] = np.broadcast_to(alpha * h, centre.shape).ravel()

    for j in tree.interior:
        kids = np.asarray(tree.children[j])
        bj, aj = complex(tree.b[j]), float(tree.alpha[j])
        bk, ak = tree.b[kids], tree.alpha[kids]
        mass = 0.5 * h * (aj + ak.sum())
        quarter = 0.25 * h
        incoming = aj * (-1.0 / h + (bj - bj.conjugate()) / 2.0 + abs(bj) ** 2 * quarter)
        outgoing = ak * (-1.0 / h - (bk - np.conj(bk)) / 2.0 + np.abs(bk) ** 2 * quarter)
        centre_value = aj * (1.0 / h + bj.real + abs(bj) ** 2 * quarter) + np.sum(
            ak * (1.0 / h - bk.real + np.abs(bk) ** 2 * quarter)
        )
        row = np.full(kids.size + 2, j)
        col = np.concatenate([[index[j, mesh - 1], j], index[kids, 1]])
        val = np.concatenate([[incoming, centre_value], outgoing]) / mass
        add(row, col, val)
        weights[position[j]] = mass

    matrix = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(free_nodes.size, free_nodes.size),
        dtype=np.complex128,
    ).tocsr()
    return OperatorMatrix(instance=instance, matrix=matrix, weights=weights, free_nodes=free_nodes)


def hermitian_defect(op: OperatorMatrix) -> float:
    """‖WA - (WA)*‖_max."""
    weighted = op.weighted
    defect = (weighted - weighted.conj().T).tocoo()
    return float(np.abs(defect.data).max(initial=0.0))


def spectrum(op: OperatorMatrix, count: Optional[int] = None) -> np.ndarray:
    """Eigenvalues of A sorted by real part (the ``count`` smallest when given)."""
    n = op.matrix.shape[0]
    if n <= _DENSE_EIGEN_LIMIT:
        values = linalg.eigvals(op.matrix.toarray())
    else:
        k = min(count or 6, n - 2)
        values = sparse_linalg.eigs(op.matrix.tocsc(), k=k, sigma=0.0, which="LM", return_eigenvectors=False)
    values = values[np.argsort(values.real)]
    return values if count is None else values[:count]


def min_eigenvalue(op: OperatorMatrix) -> complex:
    value = complex(spectrum(op, 1)[0])
    logger.bind(M=op.instance.mesh, min_eigenvalue=value.real, imag=value.imag).info("oracle.min_eigenvalue")
    return value
