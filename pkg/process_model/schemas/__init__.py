"""
Pydantic schemas for the process_model app.
Path: process_model/schemas/__init__.py
"""

from process_model.schemas._report import ValidationReport, Violation
from process_model.schemas._spec import (
    BranchDistribution,
    ProcessSpec,
    StateGenerator,
    TruncationPolicy,
)

__all__ = [
    "BranchDistribution",
    "ProcessSpec",
    "StateGenerator",
    "TruncationPolicy",
    "ValidationReport",
    "Violation",
]
