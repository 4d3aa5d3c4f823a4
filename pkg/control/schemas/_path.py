"""
Scenario paths and their played-back records.
Path: control/schemas/_path.py
"""
from dataclasses import dataclass

import numpy as np

from utils.export import split_complex

PATH_COLUMNS = ("edge", "t", "y_re", "y_im", "u_re", "u_im")


@dataclass(frozen=True)
class ScenarioPath:
    """Branch choices l_k (k = 1..T-1, 1-based state indices) and the induced edges root→leaf."""

    choices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def leaf(self) -> int:
        return self.edges[-1]


@dataclass(frozen=True, eq=False)
class PlaybackRecord:
    path: ScenarioPath
    edge_index: np.ndarray
    times: np.ndarray
    y: np.ndarray
    u: np.ndarray
    terminal_value: complex
    target: complex
    energy: float
    scale: float

    @property
    def terminal_error(self) -> float:
        return abs(self.terminal_value - self.target)

    def terminal_ok(self, tol: float) -> bool:
        return self.terminal_error <= tol * self.scale

    def rows(self) -> list[dict]:
        return [
            {"edge": int(e), "t": float(t), **split_complex("y", y), **split_complex("u", u)}
            for e, t, y, u in zip(self.edge_index, self.times, self.y, self.u)
        ]
