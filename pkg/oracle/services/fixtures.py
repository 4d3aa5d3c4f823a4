"""
Oracle fixture files: instance hash, mesh ladder, extrapolated J and sampled grid values.
Path: oracle/services/fixtures.py
"""
from pathlib import Path
from typing import Any, Optional

import numpy as np

from config.logger import logger
from errors import AppError, E
from oracle.schemas import OracleLadder
from utils.export import read_yaml, write_yaml

FIXTURE_VERSION = 1
SAMPLE_POINTS = (0.0, 0.5, 1.0)


def fixture_payload(ladder: OracleLadder, instance_hash: str, *, seed: Optional[int] = None) -> dict[str, Any]:
    grid = ladder.finest.grid
    mesh = ladder.finest.instance.mesh
    samples = []
    for e in range(grid.shape[0]):
        for t in SAMPLE_POINTS:
            samples.append({"edge": e + 1, "t": t, "y": complex(grid[e, int(round(t * mesh))])})
    return {
        "version": FIXTURE_VERSION,
        "instance_hash": instance_hash,
        "seed": seed,
        **ladder.as_dict(),
        "samples": samples,
    }


def write_fixture(path: Path, payload: dict[str, Any]) -> Path:
    path = write_yaml(path, payload)
    logger.bind(path=str(path), instance_hash=payload["instance_hash"]).info("oracle.fixture_written")
    return path


def load_fixture(path: Path, *, instance_hash: Optional[str] = None) -> dict[str, Any]:
    """Read a fixture; with ``instance_hash`` the stored hash must match."""
    path = Path(path)
    if not path.is_file():
        raise AppError(E.CONFIG__FILE_NOT_FOUND, details={"path": str(path)})
    payload = read_yaml(path)
    if not isinstance(payload, dict) or "extrapolated_energy" not in payload:
        raise AppError(E.CONFIG__INVALID, details={"path": str(path), "reason": "not an oracle fixture"})
    if instance_hash is not None and payload.get("instance_hash") != instance_hash:
        raise AppError(
            E.FIXTURE__INSTANCE_MISMATCH,
            details={"expected": instance_hash, "found": payload.get("instance_hash")},
        )
    return payload


def fixture_deviation(payload: dict[str, Any], energy: float) -> float:
    """|J - J_fixture| relative to max(1, |J_fixture|)."""
    reference = float(payload["extrapolated_energy"])
    return abs(energy - reference) / max(1.0, abs(reference))


def sample_values(payload: dict[str, Any]) -> np.ndarray:
    return np.array([complex(*s["y"]) for s in payload.get("samples", [])], dtype=np.complex128)
