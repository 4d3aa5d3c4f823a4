"""
Schemas for the tree app.
Path: tree/schemas/__init__.py
"""

from tree.schemas._tree import TemporalTree

__all__ = ["TemporalTree"]
