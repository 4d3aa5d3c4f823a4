"""
Run manifests: everything needed to reproduce a run byte for byte.
Path: cli/services/manifest.py
"""
from importlib import metadata
from pathlib import Path
from typing import Iterable, Optional

from cli.services.config import RunContext, dump_config
from config.settings import settings
from utils.export import write_yaml
from utils.hashing import file_hash

PACKAGE = "tree-control"


def package_version() -> str:
    try:
        return metadata.version(PACKAGE)
    except metadata.PackageNotFoundError:
        return "unknown"


def write_manifest(
    context: RunContext,
    command: str,
    outputs: Iterable[Path],
    *,
    fixtures: Optional[Iterable[Path]] = None,
    exit_code: int = 0,
) -> Path:
    """Config echo, seed, tolerances and content hashes; no timestamps."""
    payload = {
        "command": command,
        "version": package_version(),
        "exit_code": exit_code,
        "seed": context.seed,
        "instance_hash": context.instance_hash,
        "config_file": {"path": context.config_path.name, "hash": file_hash(context.config_path)},
        "config": dump_config(context.config),
        "tolerances": settings.tolerances(),
        "b_root_defaulted": context.spec.b_root_defaulted,
        "outputs": {Path(p).name: file_hash(p) for p in sorted(outputs, key=lambda p: Path(p).name)},
        "fixtures": {Path(p).name: file_hash(p) for p in (fixtures or [])},
    }
    return write_yaml(context.out / "manifest.yaml", payload)
