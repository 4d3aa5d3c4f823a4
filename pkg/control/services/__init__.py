"""
Services for the control app.
Path: control/services/__init__.py
"""

from control.services.certificate import corrupt_trajectory, optimality_certificate
from control.services.export import CONTROL_COLUMNS, control_rows
from control.services.extraction import control_balance, extract_controls, weighted_inner, weighted_norm
from control.services.playback import path_from_choices, playback, playback_all
from control.services.roundtrip import forward_integrate, forward_values
from control.services.sampling import leaf_frequencies, rng_for, sample_path, sample_paths

__all__ = [
    "CONTROL_COLUMNS",
    "control_rows",
    "control_balance",
    "corrupt_trajectory",
    "extract_controls",
    "forward_integrate",
    "forward_values",
    "leaf_frequencies",
    "optimality_certificate",
    "path_from_choices",
    "playback",
    "playback_all",
    "rng_for",
    "sample_path",
    "sample_paths",
    "weighted_inner",
    "weighted_norm",
]
