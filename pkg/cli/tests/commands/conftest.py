"""
Fixtures for command tests.
Path: cli/tests/commands/conftest.py
"""
import pytest


@pytest.fixture
def canonical_path(write_config, canonical_config):
    return write_config(canonical_config)
