"""
Kirchhoff correction coefficients β_j = b_j - Σ_{ν∈V_j} p̃_ν b_ν.
Path: bvp/services/kirchhoff.py
"""
import numpy as np

from errors import AppError, E
from tree.schemas import TemporalTree


def kirchhoff_betas(tree: TemporalTree) -> np.ndarray:
    """β for every edge (length E+1); entries of leaf edges and slot 0 are 0."""
    weighted = np.zeros(tree.edge_count + 1, dtype=np.complex128)
    children = np.arange(2, tree.edge_count + 1)
    np.add.at(weighted, tree.parent[children], tree.p_tilde[children] * tree.b[children])
    beta = np.where(tree.is_interior, np.nan_to_num(tree.b) - weighted, 0.0)
    return beta.astype(np.complex128)


def kirchhoff_beta(tree: TemporalTree, j: int) -> complex:
    if not 1 <= j <= tree.edge_count:
        raise AppError(E.TREE__EDGE_OUT_OF_RANGE, details={"edge": j, "edge_count": tree.edge_count})
    if not tree.is_interior[j]:
        raise AppError(E.TREE__NOT_INTERIOR, details={"vertex": j})
    children = list(tree.children[j])
    return complex(tree.b[j] - np.sum(tree.p_tilde[children] * tree.b[children]))
