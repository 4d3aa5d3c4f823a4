"""
Finite truncation of the coefficient process.
Path: process_model/services/truncation.py

Downstream modules only ever see explicit finite (θ, p) lists: ``truncate``
materializes generators, drops zero-probability states and keeps the first
K states, optionally rescaling the kept probabilities to sum to one.
"""
import math
from typing import Optional, Sequence

from config.logger import logger
from errors import AppError, E
from process_model.schemas import BranchDistribution, ProcessSpec, TruncationPolicy


def renormalized(probs: Sequence[float]) -> tuple[float, ...]:
    """Rescale ``probs`` so that ``math.fsum`` of the result is 1.

    The rounding remainder is pushed into the largest entry; a list whose
    ``fsum`` is already exactly 1 is returned unchanged.
    """
    total = math.fsum(probs)
    if total <= 0.0:
        raise AppError(E.SPEC__EMPTY_TRUNCATION, details={"probability_mass": total})
    if total == 1.0:
        return tuple(float(p) for p in probs)
    scaled = [p / total for p in probs]
    largest = max(range(len(scaled)), key=scaled.__getitem__)
    scaled[largest] += 1.0 - math.fsum(scaled)
    return tuple(scaled)


def _prune_pairs(states: Sequence[complex], probs: Sequence[float]) -> tuple[tuple[complex, ...], tuple[float, ...], list[int]]:
    kept = [(theta, p) for theta, p in zip(states, probs) if p > 0.0]
    removed = [index for index, p in enumerate(probs, start=1) if not p > 0.0]
    return tuple(t for t, _ in kept), tuple(p for _, p in kept), removed


def prune_zero_states(spec: ProcessSpec) -> ProcessSpec:
    """Remove zero-probability states (and the matching transition rows/columns)."""
    if not spec.is_explicit:
        return spec
    states, probs, removed = _prune_pairs(spec.states, spec.probs)
    update: dict = {
        "states": states,
        "probs": probs,
        "level_branches": {k: _prune_distribution(d) for k, d in spec.level_branches.items()},
        "vertex_branches": {k: _prune_distribution(d) for k, d in spec.vertex_branches.items()},
    }
    if spec.transition is not None and removed:
        keep = [i for i in range(len(spec.transition)) if i + 1 not in removed]
        update["transition"] = tuple(tuple(spec.transition[i][c] for c in keep) for i in keep)
    if removed:
        logger.bind(removed=removed).debug("process.pruned")
    return spec.model_copy(update=update)


def _prune_distribution(dist: BranchDistribution) -> BranchDistribution:
    states, probs, _ = _prune_pairs(dist.states, dist.probs)
    return BranchDistribution(states=states, probs=probs)


def _truncate_distribution(dist: BranchDistribution, k: int, renormalize: bool) -> BranchDistribution:
    states, probs = dist.states[:k], dist.probs[:k]
    if renormalize:
        probs = renormalized(probs)
    return BranchDistribution(states=states, probs=probs)


def truncate(spec: ProcessSpec, policy: TruncationPolicy) -> ProcessSpec:
    """Keep states l = 1..K of ``spec``; materializes a generator first.

    K at or above the number of available states keeps every state (no
    error). Raises ``SPEC__EMPTY_TRUNCATION`` when the kept probability mass
    is zero.
    """
    k = policy.max_states
    if spec.generator is not None:
        states, probs = spec.generator.materialize(k)
        base = spec.model_copy(update={"states": states, "probs": probs, "generator": None})
    else:
        base = prune_zero_states(spec)
        states, probs = base.states[:k], base.probs[:k]

    if math.fsum(probs) <= 0.0:
        raise AppError(E.SPEC__EMPTY_TRUNCATION, details={"K": k})
    if policy.renormalize:
        probs = renormalized(probs)

    update: dict = {
        "states": tuple(states),
        "probs": tuple(probs),
        "level_branches": {
            level: _truncate_distribution(d, k, policy.renormalize) for level, d in base.level_branches.items()
        },
        "vertex_branches": {
            vertex: _truncate_distribution(d, k, policy.renormalize) for vertex, d in base.vertex_branches.items()
        },
    }
    if base.transition is not None:
        rows = [tuple(row[:k]) for row in base.transition[:k]]
        update["transition"] = tuple(renormalized(row) if policy.renormalize else row for row in rows)
    truncated = base.model_copy(update=update)
    logger.bind(K=k, retained=len(states), renormalize=policy.renormalize).debug("process.truncated")
    return truncated


def materialize(spec: ProcessSpec, policy: Optional[TruncationPolicy]) -> ProcessSpec:
    """Explicit finite spec for tree construction: truncate when a policy is given."""
    if policy is not None:
        return truncate(spec, policy)
    if not spec.is_explicit:
        raise AppError(E.SPEC__NOT_TRUNCATED, details={"reason": "generator specs need a truncation policy"})
    return prune_zero_states(spec)
