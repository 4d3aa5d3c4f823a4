"""
Schemas for the cli app.
Path: cli/schemas/__init__.py
"""

from cli.schemas._config import (
    ConvergeOptions,
    OracleOptions,
    PlaybackOptions,
    RunConfig,
    SolveOptions,
    VerifyOptions,
)

__all__ = [
    "ConvergeOptions",
    "OracleOptions",
    "PlaybackOptions",
    "RunConfig",
    "SolveOptions",
    "VerifyOptions",
]
