"""
Breadth-first construction of the temporal tree.
Path: tree/services/build.py

The root edge carries b_1 (``ProcessSpec.root_coefficient``). Every vertex
at integer time k = 1..T-1 branches into one child per state with positive
probability; the child carries b = θ_l and p̃ = p_l. Zero-probability
states produce no edge, which covers vertices of finite multiplicity and
star graphs.
"""
from collections import deque
from typing import Optional

import numpy as np

from config.logger import logger
from config.settings import settings
from errors import AppError, E
from process_model.schemas import ProcessSpec
from tree.schemas import TemporalTree


def homogeneous_edge_count(branching: int, horizon: int) -> int:
    """E = Σ_{k=0}^{T-1} K^k for a tree with constant branching factor K."""
    return sum(branching**k for k in range(horizon))


def _branching(spec: ProcessSpec, edge: int, level: int, row: int):
    """(θ, p, drawn from spec.states) used below interior edge ``edge`` ending at time ``level``.

    ``row`` is the transition row of the edge: its state index when it was
    drawn from ``spec.states``, 0 when it has none.
    """
    if edge in spec.vertex_branches:
        dist = spec.vertex_branches[edge]
        return dist.states, dist.probs, False
    if level in spec.level_branches:
        dist = spec.level_branches[level]
        return dist.states, dist.probs, False
    if spec.transition is not None and row > 0:
        return spec.states, spec.transition[row - 1], True
    return spec.states, spec.probs, True


def build_tree(spec: ProcessSpec, *, edge_budget: Optional[int] = None) -> TemporalTree:
    """Construct the finite temporal tree of an explicit (truncated) spec.

    Raises:
        AppError(SPEC__NOT_TRUNCATED): the spec still carries a generator.
        AppError(TREE__INSTANCE_TOO_LARGE): the tree would exceed ``edge_budget``.
        AppError(SPEC__INVALID): a ``vertex_branches`` key is a leaf or not an edge at all.
    """
    if not spec.is_explicit:
        raise AppError(E.SPEC__NOT_TRUNCATED, details={"reason": "truncate generator specs first"})
    budget = settings.EDGE_BUDGET if edge_budget is None else edge_budget
    horizon = spec.horizon

    heterogeneous = bool(spec.vertex_branches or spec.level_branches or spec.transition is not None)
    if not heterogeneous:
        branching = sum(1 for p in spec.probs if p > 0.0)
        expected = homogeneous_edge_count(branching, horizon)
        if expected > budget:
            raise AppError(
                E.TREE__INSTANCE_TOO_LARGE,
                details={"edges": expected, "budget": budget, "K": branching, "T": horizon},
            )

    lookup: dict[complex, int] = {}
    for index, theta in enumerate(spec.states, start=1):
        lookup.setdefault(complex(theta), index)

    b_root = complex(spec.root_coefficient)
    parent = [-1, 0]
    depth = [0, 1]
    b = [complex("nan"), b_root]
    p_tilde = [1.0, 1.0]
    alpha = [1.0, 1.0]
    state_index = [0, lookup.get(b_root, 0)]
    # edges drawn from vertex or level distributions fall back to their value
    row = [0, lookup.get(b_root, 0)]
    children: list[list[int]] = [[1], []]
    consulted: set[int] = set()

    queue = deque([1])
    while queue:
        j = queue.popleft()
        if depth[j] >= horizon:
            continue
        if j in spec.vertex_branches:
            consulted.add(j)
        states, probs, from_states = _branching(spec, j, depth[j], row[j])
        for l, (theta, p) in enumerate(zip(states, probs), start=1):
            if not p > 0.0:
                continue
            nu = len(parent)
            if nu > budget:
                raise AppError(
                    E.TREE__INSTANCE_TOO_LARGE,
                    details={"edges_at_least": nu, "budget": budget, "T": horizon},
                )
            parent.append(j)
            depth.append(depth[j] + 1)
            b.append(complex(theta))
            p_tilde.append(float(p))
            alpha.append(float(p) * alpha[j])
            state_index.append(l)
            row.append(l if from_states else lookup.get(complex(theta), 0))
            children.append([])
            children[j].append(nu)
            queue.append(nu)

    unused = sorted(set(spec.vertex_branches) - consulted)
    if unused:
        logger.bind(keys=unused, edges=len(parent) - 1).warning("tree.unused_vertex_branches")
        raise AppError(
            E.SPEC__INVALID,
            details={
                "violations": [f"vertex_branches key {key} is not an interior edge of the tree" for key in unused],
                "codes": ["BRANCH_KEY"] * len(unused),
            },
        )

    tree = TemporalTree(
        horizon=horizon,
        parent=np.asarray(parent, dtype=np.int64),
        depth=np.asarray(depth, dtype=np.int64),
        b=np.asarray(b, dtype=np.complex128),
        p_tilde=np.asarray(p_tilde, dtype=np.float64),
        alpha=np.asarray(alpha, dtype=np.float64),
        state_index=np.asarray(state_index, dtype=np.int64),
        children=tuple(tuple(c) for c in children),
        b_root_defaulted=spec.b_root_defaulted,
        metadata={"b_root": b_root, "b_root_defaulted": spec.b_root_defaulted},
    )
    logger.bind(
        edges=tree.edge_count,
        leaves=len(tree.leaves),
        horizon=horizon,
        b_root_defaulted=spec.b_root_defaulted,
    ).info("tree.built")
    return tree

