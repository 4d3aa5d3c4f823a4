"""
Schemas for the oracle app.
Path: oracle/schemas/__init__.py
"""

from oracle.schemas._instance import MIN_MESH, DiscretizedInstance
from oracle.schemas._results import (
    ConvergenceReport,
    ConvergenceRow,
    OperatorMatrix,
    OracleLadder,
    QPResult,
)

__all__ = [
    "MIN_MESH",
    "ConvergenceReport",
    "ConvergenceRow",
    "DiscretizedInstance",
    "OperatorMatrix",
    "OracleLadder",
    "QPResult",
]
