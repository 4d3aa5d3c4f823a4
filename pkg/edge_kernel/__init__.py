"""
Closed-form machinery for a single edge of the temporal tree.
Path: edge_kernel/__init__.py
"""
