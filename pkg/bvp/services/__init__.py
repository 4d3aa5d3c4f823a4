"""
Services for the bvp app.
Path: bvp/services/__init__.py
"""

from bvp.services.apriori import AprioriReport, apriori_ratio
from bvp.services.assembly import assemble
from bvp.services.export import TRAJECTORY_COLUMNS, trajectory_rows
from bvp.services.kirchhoff import kirchhoff_beta, kirchhoff_betas
from bvp.services.norms import edge_inner_products, weighted_inner, weighted_norm
from bvp.services.solve import (
    compare_backends,
    interval_equivalence,
    solve,
    solve_interval,
    superposition_defect,
)
from bvp.services.solvers import condition_estimate, solve_recursive, solve_sparse

__all__ = [
    "AprioriReport",
    "TRAJECTORY_COLUMNS",
    "apriori_ratio",
    "assemble",
    "compare_backends",
    "condition_estimate",
    "edge_inner_products",
    "interval_equivalence",
    "kirchhoff_beta",
    "kirchhoff_betas",
    "solve",
    "solve_interval",
    "solve_recursive",
    "solve_sparse",
    "superposition_defect",
    "trajectory_rows",
    "weighted_inner",
    "weighted_norm",
]
