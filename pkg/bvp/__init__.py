"""
Boundary value problem on the temporal tree: assembly, solvers and diagnostics.
Path: bvp/__init__.py
"""
