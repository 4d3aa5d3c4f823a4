"""
Services for the oracle app.
Path: oracle/services/__init__.py
"""

from oracle.services.convergence import SAMPLE_TIMES, converge_truncation, convergence_rows
from oracle.services.fixtures import (
    fixture_deviation,
    fixture_payload,
    load_fixture,
    sample_values,
    write_fixture,
)
from oracle.services.operator import hermitian_defect, min_eigenvalue, operator_matrix, spectrum
from oracle.services.qp import (
    compare_with_trajectory,
    difference_operator,
    discretize,
    qp_ladder,
    qp_minimize,
    richardson,
)

__all__ = [
    "SAMPLE_TIMES",
    "compare_with_trajectory",
    "converge_truncation",
    "convergence_rows",
    "difference_operator",
    "discretize",
    "fixture_deviation",
    "fixture_payload",
    "hermitian_defect",
    "load_fixture",
    "min_eigenvalue",
    "operator_matrix",
    "qp_ladder",
    "qp_minimize",
    "richardson",
    "sample_values",
    "spectrum",
]
