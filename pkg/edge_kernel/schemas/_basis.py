"""
Edge basis and edge solution value types.
Path: edge_kernel/schemas/_basis.py
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
from scipy import special

from edge_kernel.schemas._terms import PolyExp

SERIES_BAND = 0.5
# 0.5^16 / 16! < 1e-18
SERIES_DEGREE = 16


def second_basis_series(a, degree: int = SERIES_DEGREE) -> np.ndarray:
    """Ascending coefficients of t·exprel(a·t) = Σ aᵏ t^{k+1} / (k+1)!; shape np.shape(a) + (degree+1,)."""
    a = np.asarray(a, dtype=np.float64)
    k = np.arange(degree)
    coef = np.zeros(a.shape + (degree + 1,))
    coef[..., 1:] = np.power(a[..., None], k) / special.factorial(k + 1)
    return coef


class BasisKind(str, Enum):
    GENERIC = "generic"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class EdgeBasis:
    """Fundamental solutions of ℒy = 0 for one constant coefficient b.

    f₁ = e^{-bt} and f₂ = t·e^{-bt}·exprel(a·t), where a = 2 Re b for the
    generic kind and a = 0 for the degenerate one (Re b inside the switch
    band). Generic f₂ equals (e^{conj(b)t} - e^{-bt})/a, so both kinds span
    the same space as {e^{-bt}, e^{conj(b)t}} resp. {e^{-bt}, t·e^{-bt}}.
    """

    kind: BasisKind
    b: complex

    @property
    def growth(self) -> float:
        return 2.0 * self.b.real if self.kind is BasisKind.GENERIC else 0.0

    @property
    def exponents(self) -> tuple[complex, complex]:
        if self.kind is BasisKind.GENERIC:
            return -self.b, self.b.conjugate()
        return -self.b, -self.b

    @property
    def control_rate(self) -> complex:
        """Exponent of ℓf₂ (ℓf₁ vanishes)."""
        return self.b.conjugate() if self.kind is BasisKind.GENERIC else -self.b

    @property
    def control_amplitude(self) -> complex:
        """ℓf₂(t) = control_amplitude · e^{control_rate·t}."""
        return 1.0 + 0j

    def functions_on(self, length: float = 1.0) -> tuple[PolyExp, PolyExp]:
        """(f₁, f₂) as exact PolyExp terms for integration over [0, length]."""
        f1 = PolyExp.single([1.0], -self.b)
        a = self.growth
        if a == 0.0:
            return f1, PolyExp.single([0.0, 1.0], -self.b)
        if abs(a) * length <= SERIES_BAND:
            return f1, PolyExp.single(second_basis_series(a), -self.b)
        return f1, PolyExp.single([1.0 / a], self.b.conjugate()) - PolyExp.single([1.0 / a], -self.b)

    @cached_property
    def functions(self) -> tuple[PolyExp, PolyExp]:
        return self.functions_on(1.0)


@dataclass(frozen=True)
class EdgeSolution:
    """y(t) = c₁f₁(t) + c₂f₂(t) on [0, length] (length 1 on tree edges)."""

    basis: EdgeBasis
    c1: complex
    c2: complex
    length: float = 1.0

    @property
    def b(self) -> complex:
        return self.basis.b

    @cached_property
    def function(self) -> PolyExp:
        f1, f2 = self.basis.functions_on(self.length)
        return f1 * self.c1 + f2 * self.c2

    @cached_property
    def control(self) -> PolyExp:
        """ℓy in closed form: c₂·ℓf₂."""
        return PolyExp.single([self.c2 * self.basis.control_amplitude], self.basis.control_rate)
