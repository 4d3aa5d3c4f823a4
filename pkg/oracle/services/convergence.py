"""
Truncation study: J(K) over a list of truncation levels.
Path: oracle/services/convergence.py
"""
from typing import Optional, Sequence

import numpy as np

from bvp.schemas import BoundaryData
from bvp.services import solve
from config.logger import logger
from control.services import extract_controls
from errors import AppError, E
from oracle.schemas import ConvergenceReport, ConvergenceRow
from process_model.schemas import ProcessSpec, TruncationPolicy
from process_model.services import truncate
from tree.services import build_tree

SAMPLE_TIMES = (0.0, 0.25, 0.5, 0.75, 1.0)


def converge_truncation(
    spec: ProcessSpec,
    k_list: Sequence[int],
    *,
    data: Optional[BoundaryData] = None,
    renormalize: bool = True,
    edge_budget: Optional[int] = None,
    backend: Optional[str] = None,
) -> ConvergenceReport:
    """Solve the truncated problem for every K; report J(K), successive differences and u₁(K)."""
    data = data or BoundaryData.from_spec(spec)
    if not data.is_uniform:
        raise AppError(E.SPEC__INVALID, details={"reason": "truncation studies need a uniform terminal value phi1"})

    rows: list[ConvergenceRow] = []
    previous: Optional[float] = None
    for k in k_list:
        truncated = truncate(spec, TruncationPolicy(K=k, renormalize=renormalize))
        try:
            tree = build_tree(truncated, edge_budget=edge_budget)
        except AppError as exc:
            if exc.code == E.TREE__INSTANCE_TOO_LARGE:
                raise AppError(exc.code, exit_code=exc.exit_code, details={**exc.details, "K": k}) from exc
            raise
        family = extract_controls(solve(tree, data, backend=backend))
        energy = family.energy
        rows.append(
            ConvergenceRow(
                K=int(k),
                edges=tree.edge_count,
                energy=energy,
                difference=None if previous is None else abs(energy - previous),
                root_control=[complex(v) for v in family.values(np.asarray(SAMPLE_TIMES))[0]],
            )
        )
        previous = energy

    report = ConvergenceReport(rows=tuple(rows), sample_times=SAMPLE_TIMES)
    logger.bind(
        K=[r.K for r in rows],
        energies=[r.energy for r in rows],
        decreasing=report.decreasing,
        flat=report.flat,
    ).info("oracle.converged")
    return report


def convergence_rows(report: ConvergenceReport) -> list[dict]:
    return [
        {"K": r.K, "edges": r.edges, "J": r.energy, "difference": r.difference} for r in report.rows
    ]
