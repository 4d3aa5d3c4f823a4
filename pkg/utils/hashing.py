"""
Content hashing for manifests and fixtures.
Path: utils/hashing.py
"""
import hashlib
import json
from pathlib import Path
from typing import Any

from utils.export import to_plain


def content_hash(payload: Any) -> str:
    """sha256 over the canonical JSON form of ``payload`` (sorted keys, no whitespace)."""
    canonical = json.dumps(to_plain(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def file_hash(path: Path) -> str:
    """Git-style content hash of a file: sha256 of ``blob <size>\\0<bytes>``."""
    data = Path(path).read_bytes()
    header = f"blob {len(data)}\0".encode("utf-8")
    return hashlib.sha256(header + data).hexdigest()
