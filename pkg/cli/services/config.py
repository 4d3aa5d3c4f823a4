"""
Loading run configurations and preparing the solver instance.
Path: cli/services/config.py
"""
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import yaml
from pydantic import ValidationError

from bvp.schemas import BoundaryData
from cli.schemas import RunConfig
from config.logger import logger
from errors import AppError, E
from process_model.schemas import ProcessSpec
from process_model.services import ensure_valid, materialize
from tree.schemas import TemporalTree
from tree.services import build_tree
from utils.hashing import content_hash


def load_run_config(path: Path) -> RunConfig:
    """Parse a YAML (``.yaml``/``.yml``) or JSON run configuration."""
    path = Path(path)
    if not path.is_file():
        raise AppError(E.CONFIG__FILE_NOT_FOUND, details={"path": str(path)})
    text = path.read_text(encoding="utf-8")
    try:
        if path.suffix.lower() == ".json":
            return RunConfig.model_validate_json(text)
        payload = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise AppError(E.CONFIG__INVALID, details={"path": str(path), "reason": str(exc)}) from exc
    except ValidationError as exc:
        raise AppError(E.CONFIG__INVALID, details={"path": str(path), "errors": _errors(exc)}) from exc
    if not isinstance(payload, dict):
        raise AppError(E.CONFIG__INVALID, details={"path": str(path), "reason": "top level must be a mapping"})
    try:
        return RunConfig.model_validate(payload)
    except ValidationError as exc:
        raise AppError(E.CONFIG__INVALID, details={"path": str(path), "errors": _errors(exc)}) from exc


def _errors(exc: ValidationError) -> list[str]:
    return [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()]


def ensure_output_dir(path: Path) -> Path:
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise AppError(E.CONFIG__OUTPUT_NOT_WRITABLE, details={"path": str(path), "reason": str(exc)}) from exc
    if not os.access(path, os.W_OK):
        raise AppError(E.CONFIG__OUTPUT_NOT_WRITABLE, details={"path": str(path)})
    return path


def draw_seed() -> int:
    """Fresh 32-bit seed; always recorded in the run manifest."""
    return int(np.random.SeedSequence().generate_state(1)[0])


def instance_hash(spec: ProcessSpec) -> str:
    """Content hash of the explicit (materialized) process and boundary data."""
    return content_hash(spec.model_dump(mode="json"))


@dataclass(frozen=True, eq=False)
class RunContext:
    config: RunConfig
    config_path: Path
    out: Path
    seed: int
    spec: ProcessSpec
    tree: TemporalTree
    data: BoundaryData
    instance_hash: str


def prepare_run(config_path: Path, out: Path, seed: Optional[int] = None, *, build: bool = True) -> RunContext:
    """Load, validate and materialize a run; ``build=False`` skips the tree (truncation studies)."""
    config = load_run_config(config_path)
    ensure_output_dir(out)
    seed = seed if seed is not None else config.seed
    seed = draw_seed() if seed is None else seed
    raw = config.process_spec()
    ensure_valid(raw)
    spec = materialize(raw, config.truncation) if build else raw
    tree = build_tree(spec) if build else None
    data = BoundaryData.from_spec(spec)
    if tree is not None:
        data.leaf_targets(tree)
    context = RunContext(
        config=config,
        config_path=Path(config_path),
        out=Path(out),
        seed=seed,
        spec=spec,
        tree=tree,
        data=data,
        instance_hash=instance_hash(spec) if build else content_hash(raw.model_dump(mode="json")),
    )
    logger.bind(config=str(config_path), seed=seed, instance_hash=context.instance_hash).info("cli.run_prepared")
    return context


def dump_config(config: RunConfig) -> dict:
    """JSON-compatible echo of the run config for manifests."""
    return json.loads(config.model_dump_json())
