"""
Structured-text export of a temporal tree (edge list).
Path: tree/services/export.py
"""
from pathlib import Path

from tree.schemas import TemporalTree
from utils.export import write_yaml

TREE_COLUMNS = ("index", "parent", "depth", "b_re", "b_im", "p_tilde", "alpha")


def tree_rows(tree: TemporalTree) -> list[dict]:
    """One row per edge with parent, depth, b as two reals, p̃ and α."""
    return [
        {
            "index": j,
            "parent": int(tree.parent[j]),
            "depth": int(tree.depth[j]),
            "b_re": float(tree.b[j].real),
            "b_im": float(tree.b[j].imag),
            "p_tilde": float(tree.p_tilde[j]),
            "alpha": float(tree.alpha[j]),
        }
        for j in range(1, tree.edge_count + 1)
    ]


def export_tree(tree: TemporalTree, path: Path) -> Path:
    return write_yaml(
        path,
        {
            "horizon": tree.horizon,
            "edge_count": tree.edge_count,
            "leaf_count": len(tree.leaves),
            "b_root_defaulted": tree.b_root_defaulted,
            "edges": tree_rows(tree),
        },
    )
