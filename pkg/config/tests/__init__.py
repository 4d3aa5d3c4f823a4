"""
Tests for config module.
"""
