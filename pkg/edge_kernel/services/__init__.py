"""
Services for the edge_kernel app.
Path: edge_kernel/services/__init__.py
"""

from edge_kernel.services.kernel import (
    apply_l,
    edge_energy,
    edge_sobolev,
    energy_closed_form,
    euler_lagrange_residual,
    evaluate,
    make_basis,
    solve_two_point,
)
from edge_kernel.services.tables import (
    EndpointTable,
    basis_terms,
    basis_values,
    control_terms,
    endpoint_table,
    generic_mask,
    gram,
    growth_rate,
    quadratic_form,
    series_mask,
)

__all__ = [
    "EndpointTable",
    "apply_l",
    "basis_terms",
    "basis_values",
    "control_terms",
    "edge_energy",
    "edge_sobolev",
    "endpoint_table",
    "energy_closed_form",
    "euler_lagrange_residual",
    "evaluate",
    "generic_mask",
    "gram",
    "growth_rate",
    "make_basis",
    "quadratic_form",
    "series_mask",
    "solve_two_point",
]
