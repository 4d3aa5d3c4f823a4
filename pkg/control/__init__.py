"""
Optimal control family: extraction, energy, playback and certificates.
Path: control/__init__.py
"""
