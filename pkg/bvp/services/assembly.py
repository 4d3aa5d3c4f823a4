"""
Assembly of the 2E×2E system: root, continuity, leaf and Kirchhoff rows.
Path: bvp/services/assembly.py

Edge j owns two rows. Row 2(j-1) is its start condition: the root condition
y₁(0) = φ₀ for j = 1, continuity y_{k_j}(1) - y_j(0) = 0 otherwise. Row
2(j-1)+1 is its end condition: y_j(1) = ψ_j on leaves and the Kirchhoff row
y_j'(1) + β_j y_j(1) - Σ p̃_ν y_ν'(0) = 0 on interior vertices.
"""
from typing import Optional

import numpy as np
from scipy import sparse

from bvp.schemas import BoundaryData, LinearSystem
from bvp.services.kirchhoff import kirchhoff_betas
from config.logger import logger
from edge_kernel.services import endpoint_table, generic_mask
from errors import AppError, E
from tree.schemas import TemporalTree

ROOT, CONTINUITY, LEAF, KIRCHHOFF = range(4)


def _block(rows: np.ndarray, edges: np.ndarray, values: np.ndarray):
    """Entries of one row per edge against both unknowns of ``edges``."""
    cols = np.stack([2 * (edges - 1), 2 * (edges - 1) + 1], axis=1)
    return np.repeat(rows, 2), cols.ravel(), values.ravel()


def assemble(tree: TemporalTree, data: BoundaryData, *, tol: Optional[float] = None) -> LinearSystem:
    size = 2 * tree.edge_count
    b = tree.b[1:]
    generic = generic_mask(b, tol)
    table = endpoint_table(b, generic)
    beta = kirchhoff_betas(tree)

    rows, cols, vals = [], [], []

    def add(entries):
        rows.append(entries[0])
        cols.append(entries[1])
        vals.append(entries[2])

    rhs = np.zeros(size, dtype=np.complex128)
    group = np.empty(size, dtype=np.int8)
    vertex = np.empty(size, dtype=np.int64)

    root = np.array([1])
    add(_block(np.array([0]), root, table.value0[[0]]))
    rhs[0] = data.phi0
    group[0], vertex[0] = ROOT, 0

    j = np.arange(2, tree.edge_count + 1)
    k = tree.parent[j]
    start = 2 * (j - 1)
    add(_block(start, k, table.value1[k - 1]))
    add(_block(start, j, -table.value0[j - 1]))
    group[start], vertex[start] = CONTINUITY, k

    leaves = tree.leaves
    end = 2 * (leaves - 1) + 1
    add(_block(end, leaves, table.value1[leaves - 1]))
    rhs[end] = data.leaf_targets(tree)
    group[end], vertex[end] = LEAF, leaves

    interior = tree.interior
    end = 2 * (interior - 1) + 1
    add(_block(end, interior, table.slope1[interior - 1] + beta[interior, None] * table.value1[interior - 1]))
    add(_block(2 * (k - 1) + 1, j, -tree.p_tilde[j, None] * table.slope0[j - 1]))
    group[end], vertex[end] = KIRCHHOFF, interior

    matrix = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(size, size),
        dtype=np.complex128,
    ).tocsr()
    matrix.eliminate_zeros()
    empty = np.flatnonzero(np.diff(matrix.indptr) == 0)
    if empty.size:
        raise AppError(
            E.BVP__STRUCTURAL_SINGULARITY,
            details={"rows": empty.tolist(), "vertices": vertex[empty].tolist()},
        )
    system = LinearSystem(
        matrix=matrix.tocsc(),
        rhs=rhs,
        row_group=group,
        row_vertex=vertex,
        generic=np.concatenate([[False], generic]),
    )
    logger.bind(size=size, nnz=matrix.nnz, **system.group_counts()).debug("bvp.assembled")
    return system
