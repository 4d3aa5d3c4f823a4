"""
Services for the tree app.
Path: tree/services/__init__.py
"""

from tree.services.build import build_tree, homogeneous_edge_count
from tree.services.export import export_tree, tree_rows
from tree.services.paths import Realization, alpha_product, path_to_root, realizations

__all__ = [
    "Realization",
    "alpha_product",
    "build_tree",
    "export_tree",
    "homogeneous_edge_count",
    "path_to_root",
    "realizations",
    "tree_rows",
]
