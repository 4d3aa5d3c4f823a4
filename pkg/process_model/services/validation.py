"""
Admissibility checks for process specifications.
Path: process_model/services/validation.py

``validate_spec`` reports every problem it finds and never raises: a spec
with several defects yields several violations. ``ensure_valid`` is the
raising wrapper used by the solver pipeline.
"""
import math
from typing import Optional, Sequence

from config.logger import logger
from config.settings import settings
from errors import AppError, E
from process_model.schemas import ProcessSpec, ValidationReport, Violation

# Materialized prefix used to check a generator against its declared bound.
_GENERATOR_SAMPLE = 64


def _check_distribution(
    label: str,
    states: Sequence[complex],
    probs: Sequence[float],
    *,
    prune: bool,
    prob_tol: float,
    max_coefficient: float,
) -> tuple[list[Violation], list[int]]:
    violations: list[Violation] = []
    pruned: list[int] = []
    if not states and not probs:
        violations.append(Violation(code="EMPTY_STATES", message=f"{label}: no states given"))
        return violations, pruned
    if len(states) != len(probs):
        violations.append(
            Violation(
                code="LENGTH_MISMATCH",
                message=f"{label}: {len(states)} states but {len(probs)} probabilities",
            )
        )
    for index, p in enumerate(probs, start=1):
        if not math.isfinite(p) or p < 0.0 or (p == 0.0 and not prune):
            violations.append(
                Violation(
                    code="NONPOSITIVE_PROBABILITY",
                    message=f"{label}: probability p_{index}={p:g} must be positive",
                )
            )
        elif p == 0.0:
            pruned.append(index)
    if len(pruned) == len(probs):
        violations.append(Violation(code="EMPTY_STATES", message=f"{label}: every probability is zero"))
    total = math.fsum(p for p in probs if math.isfinite(p))
    if abs(total - 1.0) > prob_tol:
        violations.append(
            Violation(code="PROBABILITY_SUM", message=f"{label}: probability sum {total:g} ≠ 1")
        )
    for index, theta in enumerate(states, start=1):
        if abs(theta) > max_coefficient:
            violations.append(
                Violation(
                    code="UNBOUNDED_STATES",
                    message=f"{label}: |θ_{index}|={abs(theta):g} exceeds {max_coefficient:g}",
                )
            )
    return violations, pruned


def validate_spec(
    spec: ProcessSpec,
    *,
    prune: bool = True,
    prob_tol: Optional[float] = None,
    max_coefficient: Optional[float] = None,
) -> ValidationReport:
    """Report every admissibility violation of ``spec``.

    With ``prune`` (default) zero probabilities are not violations: the
    corresponding states are listed in ``pruned`` and dropped downstream.
    """
    prob_tol = settings.PROB_SUM_TOL if prob_tol is None else prob_tol
    max_coefficient = settings.MAX_COEFFICIENT if max_coefficient is None else max_coefficient
    violations: list[Violation] = []
    pruned: list[int] = []
    retained = 0

    if spec.horizon < 1:
        violations.append(
            Violation(code="HORIZON", message=f"horizon T={spec.horizon} must be a positive integer")
        )

    if spec.generator is not None:
        if spec.states or spec.probs:
            violations.append(
                Violation(
                    code="GENERATOR_CONFLICT",
                    message="give either explicit states/probs or a generator, not both",
                )
            )
        gen = spec.generator
        if gen.bound > max_coefficient:
            violations.append(
                Violation(
                    code="UNBOUNDED_STATES",
                    message=f"generator bound {gen.bound:g} exceeds {max_coefficient:g}",
                )
            )
        if gen.supremum() > gen.bound:
            violations.append(
                Violation(
                    code="UNBOUNDED_STATES",
                    message=f"generator sup|θ_l|={gen.supremum():g} exceeds declared bound {gen.bound:g}",
                )
            )
        sample, _ = gen.materialize(_GENERATOR_SAMPLE)
        if any(abs(theta) > gen.bound for theta in sample):
            violations.append(
                Violation(code="UNBOUNDED_STATES", message="generator produced a state above its declared bound")
            )
    else:
        found, pruned = _check_distribution(
            "states",
            spec.states,
            spec.probs,
            prune=prune,
            prob_tol=prob_tol,
            max_coefficient=max_coefficient,
        )
        violations.extend(found)
        retained = len(spec.probs) - len(pruned)

    if spec.b_root is not None and abs(spec.b_root) > max_coefficient:
        violations.append(
            Violation(
                code="UNBOUNDED_STATES",
                message=f"|b_root|={abs(spec.b_root):g} exceeds {max_coefficient:g}",
            )
        )

    if spec.phi1 is None and spec.psi is None:
        violations.append(Violation(code="MISSING_TARGETS", message="either phi1 or psi must be given"))
    elif spec.phi1 is not None and spec.psi is not None:
        violations.append(Violation(code="AMBIGUOUS_TARGETS", message="phi1 and psi are mutually exclusive"))

    for level, dist in sorted(spec.level_branches.items()):
        if not 1 <= level <= max(spec.horizon - 1, 0):
            violations.append(
                Violation(code="BRANCH_KEY", message=f"level_branches key {level} outside 1..T-1")
            )
        found, _ = _check_distribution(
            f"level_branches[{level}]",
            dist.states,
            dist.probs,
            prune=prune,
            prob_tol=prob_tol,
            max_coefficient=max_coefficient,
        )
        violations.extend(found)

    for vertex, dist in sorted(spec.vertex_branches.items()):
        if vertex < 1:
            violations.append(
                Violation(code="BRANCH_KEY", message=f"vertex_branches key {vertex} must be an edge index ≥ 1")
            )
        found, _ = _check_distribution(
            f"vertex_branches[{vertex}]",
            dist.states,
            dist.probs,
            prune=prune,
            prob_tol=prob_tol,
            max_coefficient=max_coefficient,
        )
        violations.extend(found)

    if spec.transition is not None:
        size = len(spec.states) if spec.generator is None else None
        for row_index, row in enumerate(spec.transition, start=1):
            if size is not None and len(row) != size:
                violations.append(
                    Violation(
                        code="TRANSITION_SHAPE",
                        message=f"transition row {row_index} has {len(row)} entries, expected {size}",
                    )
                )
            if any(p < 0.0 or not math.isfinite(p) for p in row):
                violations.append(
                    Violation(code="NONPOSITIVE_PROBABILITY", message=f"transition row {row_index} has a negative entry")
                )
            total = math.fsum(row)
            if abs(total - 1.0) > prob_tol:
                violations.append(
                    Violation(
                        code="PROBABILITY_SUM",
                        message=f"transition row {row_index}: probability sum {total:g} ≠ 1",
                    )
                )
        if size is not None and len(spec.transition) != size:
            violations.append(
                Violation(
                    code="TRANSITION_SHAPE",
                    message=f"transition has {len(spec.transition)} rows, expected {size}",
                )
            )

    report = ValidationReport(violations=violations, retained_states=retained, pruned=pruned)
    logger.bind(violations=len(violations), pruned=len(pruned)).debug("process.validated")
    return report


def ensure_valid(spec: ProcessSpec, **kwargs) -> ValidationReport:
    """Raise ``SPEC__INVALID`` carrying all violation messages if ``spec`` is inadmissible."""
    report = validate_spec(spec, **kwargs)
    if not report.ok:
        raise AppError(E.SPEC__INVALID, details={"violations": report.messages()})
    return report
