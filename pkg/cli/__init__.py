"""
Command-line entry point: reproducible solve, playback, verify, converge and fixture runs.
Path: cli/__init__.py
"""
