"""
Brute-force verification: mesh-discretized energy minimization and operator checks.
Path: oracle/__init__.py
"""
