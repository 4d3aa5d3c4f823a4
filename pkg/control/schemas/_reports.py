"""
Verification reports produced by the control services.
Path: control/schemas/_reports.py
"""
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class CertificateReport:
    trials: int
    seed: int
    feasible: bool
    max_first_order: float
    first_order_bound: float
    max_first_order_ratio: float
    min_descent: float
    descent_bound: float
    first_order_ok: bool
    descent_ok: bool

    @property
    def passed(self) -> bool:
        return self.feasible and self.first_order_ok and self.descent_ok

    def as_dict(self) -> dict:
        return {**asdict(self), "passed": self.passed}


@dataclass(frozen=True)
class RoundTripReport:
    max_deviation: float
    bound: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.bound

    def as_dict(self) -> dict:
        return {**asdict(self), "passed": self.passed}


@dataclass(frozen=True)
class ExhaustiveReport:
    """Playback over every leaf: terminal errors and the α-weighted realized energy."""

    leaves: int
    max_terminal_error: float
    expected_energy: float
    energy: float
    terminal_bound: float

    @property
    def energy_gap(self) -> float:
        return abs(self.expected_energy - self.energy) / max(self.energy, 1e-300)

    @property
    def passed(self) -> bool:
        return self.max_terminal_error <= self.terminal_bound

    def as_dict(self) -> dict:
        return {**asdict(self), "energy_gap": self.energy_gap, "passed": self.passed}
