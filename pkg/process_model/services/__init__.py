"""
Services for the process_model app.
Path: process_model/services/__init__.py
"""

from process_model.services.truncation import (
    materialize,
    prune_zero_states,
    renormalized,
    truncate,
)
from process_model.services.validation import ensure_valid, validate_spec

__all__ = [
    "ensure_valid",
    "materialize",
    "prune_zero_states",
    "renormalized",
    "truncate",
    "validate_spec",
]
