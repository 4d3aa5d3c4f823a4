"""
Services for the cli app.
Path: cli/services/__init__.py
"""

from cli.services.config import (
    RunContext,
    draw_seed,
    dump_config,
    ensure_output_dir,
    instance_hash,
    load_run_config,
    prepare_run,
)
from cli.services.manifest import package_version, write_manifest

__all__ = [
    "RunContext",
    "draw_seed",
    "dump_config",
    "ensure_output_dir",
    "instance_hash",
    "load_run_config",
    "package_version",
    "prepare_run",
    "write_manifest",
]
