"""
Open-loop playback of the control family along scenario paths.
Path: control/services/playback.py

If the coefficient switches to θ_l at time k while the path sits at the end
of edge j, the control continues with u(t) = u_ν(t - k) on the child ν of j
carrying state l.
"""
from typing import Optional, Sequence

import numpy as np

from config.settings import settings
from control.schemas import ControlFamily, ExhaustiveReport, PlaybackRecord, ScenarioPath
from errors import AppError, E
from tree.schemas import TemporalTree


def path_from_choices(tree: TemporalTree, choices: Sequence[int]) -> ScenarioPath:
    """Follow 1-based state choices l_1..l_{T-1} from the root edge."""
    if len(choices) != tree.horizon - 1:
        raise AppError(
            E.CONTROL__INVALID_PATH,
            details={"reason": "need one choice per switch time", "expected": tree.horizon - 1, "got": len(choices)},
        )
    edges = [1]
    for k, choice in enumerate(choices, start=1):
        match = [nu for nu in tree.children[edges[-1]] if tree.state_index[nu] == choice]
        if not match:
            available = sorted(int(tree.state_index[nu]) for nu in tree.children[edges[-1]])
            raise AppError(
                E.CONTROL__INVALID_PATH,
                details={"time": k, "choice": int(choice), "available": available},
            )
        edges.append(int(match[0]))
    return ScenarioPath(choices=tuple(int(c) for c in choices), edges=tuple(edges))


def _check_path(tree: TemporalTree, path: ScenarioPath) -> None:
    edges = path.edges
    if len(edges) != tree.horizon or edges[0] != 1:
        raise AppError(E.CONTROL__INVALID_PATH, details={"reason": "path must run root to leaf", "edges": list(edges)})
    for k, (j, nu) in enumerate(zip(edges, edges[1:]), start=1):
        if not 1 <= nu <= tree.edge_count or tree.parent[nu] != j:
            raise AppError(E.CONTROL__INVALID_PATH, details={"time": k, "edge": int(nu), "parent": int(j)})


def _target_of(family: ControlFamily, leaf: int) -> complex:
    tree = family.tree
    position = int(np.searchsorted(tree.leaves, leaf))
    return complex(family.trajectory.data.leaf_targets(tree)[position])


def playback(family: ControlFamily, path: ScenarioPath, *, samples_per_edge: int = 11) -> PlaybackRecord:
    """Stitch y and u along ``path`` on [0, T] and record the terminal value and realized energy."""
    tree = family.tree
    _check_path(tree, path)
    edges = np.asarray(path.edges, dtype=np.int64)
    local = np.linspace(0.0, 1.0, samples_per_edge)
    y_all, _ = family.trajectory.values(local)
    u_all = family.values(local)

    y = y_all[edges - 1].ravel()
    u = u_all[edges - 1].ravel()
    times = (np.arange(len(edges))[:, None] + local[None, :]).ravel()
    leaf = int(edges[-1])
    terminal = complex(family.trajectory.values([1.0])[0][leaf - 1, 0])
    return PlaybackRecord(
        path=path,
        edge_index=np.repeat(edges, samples_per_edge),
        times=times,
        y=y,
        u=u,
        terminal_value=terminal,
        target=_target_of(family, leaf),
        energy=float(family.edge_energies[edges].sum()),
        scale=family.trajectory.scale,
    )


def playback_all(family: ControlFamily, *, tol: Optional[float] = None) -> ExhaustiveReport:
    """Play back every leaf at once: terminal errors and Σ α_leaf·(realized energy)."""
    tol = settings.RESIDUAL_TOL if tol is None else tol
    tree = family.tree
    cumulative = np.zeros(tree.edge_count + 1)
    for level in range(1, tree.horizon + 1):
        edges = tree.edges_at_depth(level)
        cumulative[edges] = cumulative[tree.parent[edges]] + family.edge_energies[edges]
    leaves = tree.leaves
    end_values = family.trajectory.values([1.0])[0][leaves - 1, 0]
    errors = np.abs(end_values - family.trajectory.data.leaf_targets(tree))
    return ExhaustiveReport(
        leaves=len(leaves),
        max_terminal_error=float(errors.max(initial=0.0)),
        expected_energy=float(np.sum(tree.alpha[leaves] * cumulative[leaves])),
        energy=family.energy,
        terminal_bound=tol * family.trajectory.scale,
    )
