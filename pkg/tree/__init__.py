"""
Temporal tree construction from a truncated coefficient process.
Path: tree/__init__.py
"""
