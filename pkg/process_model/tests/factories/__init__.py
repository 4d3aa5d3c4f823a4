"""
Factories for creating test data across the solver apps.
Path: process_model/tests/factories/__init__.py
"""

from ._spec import (
    BoundaryDataFactory,
    BranchDistributionFactory,
    ComplexProcessSpecFactory,
    ConstantProcessSpecFactory,
    GeneratorSpecFactory,
    PerLeafSpecFactory,
    ProcessSpecFactory,
    TruncationPolicyFactory,
    ZeroDataSpecFactory,
)

__all__ = [
    "BoundaryDataFactory",
    "BranchDistributionFactory",
    "ComplexProcessSpecFactory",
    "ConstantProcessSpecFactory",
    "GeneratorSpecFactory",
    "PerLeafSpecFactory",
    "ProcessSpecFactory",
    "TruncationPolicyFactory",
    "ZeroDataSpecFactory",
]
