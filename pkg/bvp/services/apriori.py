"""
Empirical a priori constant: ‖y‖₁ / (|φ₀| + |φ₁|) over random boundary pairs.
Path: bvp/services/apriori.py
"""
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from bvp.schemas import BoundaryData
from bvp.services.norms import weighted_inner
from bvp.services.solve import solve
from config.logger import logger
from tree.schemas import TemporalTree

STABILITY_TOL = 0.05


@dataclass(frozen=True)
class AprioriReport:
    samples: int
    seed: int
    max_ratio: float
    max_ratio_doubled: float
    relative_change: float
    extreme_ratio: float

    @property
    def stable(self) -> bool:
        return self.relative_change <= STABILITY_TOL

    def as_dict(self) -> dict:
        return {**asdict(self), "stable": self.stable}


def apriori_ratio(
    tree: TemporalTree, *, samples: int = 100, seed: int = 0, backend: Optional[str] = None
) -> AprioriReport:
    """Max of ‖y‖₁/(|φ₀|+|φ₁|) over ``samples`` pairs and over twice as many.

    By linearity y = φ₀·y⁽⁰⁾ + φ₁·y⁽¹⁾, so two solves and their 2×2 Gram
    matrix give every ratio exactly. Pairs are drawn on the unit ℓ¹ sphere
    (the ratio is scale invariant) with |φ₁| uniform in [0, 1] and uniform
    phases. ``extreme_ratio`` is the maximum over the whole sphere, attained
    at (1, 0) or (0, 1) because the numerator is a norm.
    """
    basis = [
        solve(tree, BoundaryData(phi0=1.0, phi1=0.0), backend=backend),
        solve(tree, BoundaryData(phi0=0.0, phi1=1.0), backend=backend),
    ]
    g = np.array([[weighted_inner(a, b, 1) for b in basis] for a in basis])

    rng = np.random.Generator(np.random.Philox(seed))
    weight = rng.uniform(0.0, 1.0, size=2 * samples)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(2 * samples, 2))
    pairs = np.stack([(1.0 - weight) * np.exp(1j * phases[:, 0]), weight * np.exp(1j * phases[:, 1])], axis=1)
    norms_sq = np.einsum("ni,ik,nk->n", pairs, g, np.conj(pairs)).real
    ratios = np.sqrt(np.maximum(norms_sq, 0.0)) / np.abs(pairs).sum(axis=1)

    first, both = float(ratios[:samples].max()), float(ratios.max())
    report = AprioriReport(
        samples=samples,
        seed=seed,
        max_ratio=first,
        max_ratio_doubled=both,
        relative_change=(both - first) / first if first > 0 else 0.0,
        extreme_ratio=float(np.sqrt(max(g[0, 0].real, g[1, 1].real))),
    )
    logger.bind(**report.as_dict()).info("bvp.apriori")
    return report
