"""
Stochastic coefficient process: specification, validation and truncation.
Path: process_model/__init__.py
"""
