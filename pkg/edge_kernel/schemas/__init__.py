"""
Schemas for the edge_kernel app.
Path: edge_kernel/schemas/__init__.py
"""

from edge_kernel.schemas._basis import (
    SERIES_BAND,
    SERIES_DEGREE,
    BasisKind,
    EdgeBasis,
    EdgeSolution,
    second_basis_series,
)
from edge_kernel.schemas._terms import ExpTerm, PolyExp

__all__ = [
    "SERIES_BAND",
    "SERIES_DEGREE",
    "BasisKind",
    "EdgeBasis",
    "EdgeSolution",
    "ExpTerm",
    "PolyExp",
    "second_basis_series",
]
