"""
Schemas for the bvp app.
Path: bvp/schemas/__init__.py
"""

from bvp.schemas._data import BoundaryData
from bvp.schemas._system import ROW_GROUPS, LinearSystem
from bvp.schemas._trajectory import SolveDiagnostics, TreeTrajectory

__all__ = ["ROW_GROUPS", "BoundaryData", "LinearSystem", "SolveDiagnostics", "TreeTrajectory"]
