"""
Schemas for the control app.
Path: control/schemas/__init__.py
"""

from control.schemas._family import ControlFamily
from control.schemas._path import PATH_COLUMNS, PlaybackRecord, ScenarioPath
from control.schemas._reports import CertificateReport, ExhaustiveReport, RoundTripReport

__all__ = [
    "PATH_COLUMNS",
    "CertificateReport",
    "ControlFamily",
    "ExhaustiveReport",
    "PlaybackRecord",
    "RoundTripReport",
    "ScenarioPath",
]
