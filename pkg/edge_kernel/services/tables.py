"""
Vectorized per-edge basis data used by the tree-level solvers.
Path: edge_kernel/services/tables.py

f₁ = e^{-bt} and f₂ = t·e^{-bt}·exprel(a·t) with a = 2 Re b on generic
edges and a = 0 inside the switch band, so ℓf₁ = 0 and ℓf₂ = e^{(a-b)t}.
f₂ equals (e^{conj(b)t} - e^{-bt})/a and tends to t·e^{-bt} as a → 0
without cancellation.

For exact integrals each basis function is written as a sum of two terms
p(t)·e^{λt} with rates λ₀ = -b and λ₁ = a - b. When |a|·L is small f₂ is
its Taylor polynomial times e^{-bt}; otherwise it is the two exponentials
over a. Coefficient arrays have shape (n, 2, 2, SERIES_DEGREE + 1): edge,
basis function, term, polynomial degree.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import special

from config.settings import settings
from edge_kernel.moments import exp_moments
from edge_kernel.schemas import SERIES_BAND, SERIES_DEGREE, second_basis_series


def generic_mask(b, tol: Optional[float] = None) -> np.ndarray:
    tol = settings.BASIS_SWITCH_TOL if tol is None else tol
    return np.abs(np.real(np.asarray(b, dtype=np.complex128))) > tol


def growth_rate(b, generic) -> np.ndarray:
    """a = 2 Re b on generic edges, 0 on degenerate ones."""
    b = np.asarray(b, dtype=np.complex128)
    return np.where(generic, 2.0 * b.real, 0.0)


def series_mask(b, generic, length: float = 1.0) -> np.ndarray:
    return np.abs(growth_rate(b, generic)) * length <= SERIES_BAND


def basis_terms(b, generic: np.ndarray, derivative: int = 0, length: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """(coef (n,2,2,D+1), rate (n,2)) of f₁, f₂ or of their derivatives on [0, length]."""
    b = np.asarray(b, dtype=np.complex128)
    generic = np.asarray(generic, dtype=bool)
    n = b.shape[0]
    a = growth_rate(b, generic)
    series = series_mask(b, generic, length)

    rate = np.stack([-b, a - b], axis=1)
    coef = np.zeros((n, 2, 2, SERIES_DEGREE + 1), dtype=np.complex128)
    coef[:, 0, 0, 0] = 1.0
    coef[series, 1, 0] = second_basis_series(a[series])
    wide = ~series
    coef[wide, 1, 0, 0] = -1.0 / a[wide]
    coef[wide, 1, 1, 0] = 1.0 / a[wide]

    powers = np.arange(1, SERIES_DEGREE + 1)
    for _ in range(derivative):
        # (p' + λp)·e^{λt}
        shifted = np.zeros_like(coef)
        shifted[..., :-1] = coef[..., 1:] * powers
        coef = shifted + rate[:, None, :, None] * coef
    return coef, rate


def basis_values(b, generic: np.ndarray, t) -> tuple[np.ndarray, np.ndarray]:
    """Values and derivatives of (f₁, f₂) at ``t``; shapes broadcast(b, t) + (2,)."""
    b = np.asarray(b, dtype=np.complex128)
    t = np.asarray(t, dtype=np.float64)
    a = growth_rate(b, np.asarray(generic, dtype=bool))
    with np.errstate(over="ignore", invalid="ignore"):
        e1 = np.exp(-b * t)
        f1 = e1
        df1 = -b * e1
        f2 = t * e1 * special.exprel(a * t)
        df2 = np.exp((a - b) * t) - b * f2
    return np.stack(np.broadcast_arrays(f1, f2), axis=-1), np.stack(np.broadcast_arrays(df1, df2), axis=-1)


@dataclass(frozen=True)
class EndpointTable:
    """f(0), f(1), f'(0), f'(1) for every edge, each of shape (n, 2)."""

    value0: np.ndarray
    value1: np.ndarray
    slope0: np.ndarray
    slope1: np.ndarray


def endpoint_table(b, generic: np.ndarray) -> EndpointTable:
    v0, d0 = basis_values(b, generic, 0.0)
    v1, d1 = basis_values(b, generic, 1.0)
    return EndpointTable(value0=v0, value1=v1, slope0=d0, slope1=d1)


def control_terms(b, generic: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(amplitude factor, rate) with ℓf₂ = factor·e^{rate·t}; the factor is 1."""
    b = np.asarray(b, dtype=np.complex128)
    factor = np.ones(b.shape, dtype=np.complex128)
    rate = np.where(generic, np.conj(b), -b)
    return factor, rate


def gram(b, generic: np.ndarray, derivative: int = 0, length: float = 1.0) -> np.ndarray:
    """G[e, i, k] = ∫₀ᴸ f_i^{(d)} conj(f_k^{(d)}) dt per edge, shape (n, 2, 2)."""
    coef, rate = basis_terms(b, generic, derivative, length)
    series = series_mask(b, generic, length)
    # z[e, s, u] = λ_s + conj(λ_u); all real since Im λ₀ = Im λ₁ = -Im b
    z = rate[:, :, None] + np.conj(rate[:, None, :])
    top = 2 * SERIES_DEGREE
    m = np.zeros(z.shape + (top + 1,), dtype=np.complex128)
    if np.any(series):
        m[series] = exp_moments(top, z[series], length)
    if np.any(~series):
        # two-exponential form: every term has degree 0
        m[~series, :, :, :1] = exp_moments(0, z[~series], length)

    # product polynomials P_{i,s}·conj(P_{k,u}), indexed (n, i, k, s, u, degree)
    product = np.zeros((coef.shape[0], 2, 2, 2, 2, top + 1), dtype=np.complex128)
    right = np.conj(coef)[:, None, :, None, :, :]
    for p in range(SERIES_DEGREE + 1):
        product[..., p : p + SERIES_DEGREE + 1] += coef[:, :, None, :, None, p, None] * right
    return np.einsum("niksud,nsud->nik", product, m)


def quadratic_form(gram_matrix: np.ndarray, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Per-edge cᵀ·G·conj(d) for coefficient arrays of shape (n, 2)."""
    return np.einsum("ni,nik,nk->n", left, gram_matrix, np.conj(right))
