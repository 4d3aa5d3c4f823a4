"""
Validation report for process specifications.
Path: process_model/schemas/_report.py
"""

from pydantic import BaseModel, Field


class Violation(BaseModel):
    """A single admissibility problem found in a ProcessSpec."""

    code: str = Field(..., description="Short machine-readable code, e.g. PROBABILITY_SUM.")
    message: str = Field(..., description="Human-readable description.")


class ValidationReport(BaseModel):
    """Outcome of ``validate_spec``. Empty ``violations`` means the spec is admissible."""

    violations: list[Violation] = Field(default_factory=list)
    retained_states: int = Field(default=0, description="States kept after pruning zero probabilities.")
    pruned: list[int] = Field(default_factory=list, description="1-based indices of pruned states.")

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> list[str]:
        return [v.code for v in self.violations]

    def messages(self) -> list[str]:
        return [v.message for v in self.violations]
