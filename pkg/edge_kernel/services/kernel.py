"""
Single-edge operations: basis selection, evaluation, ℓ, energy and Sobolev norms.
Path: edge_kernel/services/kernel.py
"""
from typing import Optional

import numpy as np
from scipy import integrate, special

from config.settings import settings
from edge_kernel.schemas import BasisKind, EdgeBasis, EdgeSolution
from errors import AppError, E

_QUAD_LIMIT = 200


def make_basis(b: complex, tol: Optional[float] = None) -> EdgeBasis:
    """Generic basis when |Re b| > tol, degenerate basis otherwise."""
    tol = settings.BASIS_SWITCH_TOL if tol is None else tol
    b = complex(b)
    kind = BasisKind.GENERIC if abs(b.real) > tol else BasisKind.DEGENERATE
    return EdgeBasis(kind=kind, b=b)


def _check_range(sol: EdgeSolution, t) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    if np.any(t < 0.0) or np.any(t > sol.length) or np.any(np.isnan(t)):
        raise AppError(E.KERNEL__T_OUT_OF_RANGE, details={"length": sol.length})
    return t


def evaluate(sol: EdgeSolution, t) -> tuple:
    """(y(t), y'(t)) of c₁f₁ + c₂f₂; ``t`` may be a scalar or an array."""
    t = _check_range(sol, t)
    y = sol.function(t)
    dy = sol.function.derivative()(t)
    if t.ndim == 0:
        return complex(y), complex(dy)
    return y, dy


def apply_l(sol: EdgeSolution, t):
    """ℓy(t) = y'(t) + b·y(t), evaluated from the closed form c₂·ℓf₂."""
    t = _check_range(sol, t)
    value = sol.control(t)
    return complex(value) if t.ndim == 0 else value


def _quad_sq(func, length: float) -> float:
    value, _ = integrate.quad(lambda s: abs(complex(func(s))) ** 2, 0.0, length, limit=_QUAD_LIMIT, epsabs=0.0, epsrel=1e-12)
    return float(value)


def energy_closed_form(amplitude, rate, length: float = 1.0) -> np.ndarray:
    """∫₀ᴸ |A·e^{λt}|² dt = |A|²·L·exprel(2 Re(λ)·L), vectorized."""
    amplitude = np.asarray(amplitude, dtype=np.complex128)
    x = 2.0 * np.real(np.asarray(rate, dtype=np.complex128)) * length
    with np.errstate(over="ignore", invalid="ignore"):
        return np.abs(amplitude) ** 2 * length * special.exprel(x)


def edge_energy(sol: EdgeSolution) -> float:
    """Exact ∫|ℓy|² over the edge; quadrature only when the closed form overflows."""
    if sol.c2 == 0:
        return 0.0
    value = float(energy_closed_form(sol.c2 * sol.basis.control_amplitude, sol.basis.control_rate, sol.length))
    if not np.isfinite(value):
        value = _quad_sq(sol.control, sol.length)
    return value


def edge_sobolev(sol: EdgeSolution, s: int = 0) -> float:
    """∫|y|² for s=0, ∫(|y|² + |y'|²) for s=1."""
    if s not in (0, 1):
        raise AppError(E.KERNEL__INVALID_ORDER, details={"s": s, "allowed": [0, 1]})
    y = sol.function
    value = y.norm_sq(sol.length)
    if s == 1:
        value += y.derivative().norm_sq(sol.length)
    if not np.isfinite(value):
        value = _quad_sq(y, sol.length)
        if s == 1:
            value += _quad_sq(y.derivative(), sol.length)
    return float(value)


def euler_lagrange_residual(sol: EdgeSolution, t) -> np.ndarray:
    """ℒy evaluated by exact differentiation of the basis (zero for a true edge solution)."""
    return sol.function.apply_euler_lagrange(sol.b)(np.asarray(t, dtype=np.float64))


def solve_two_point(basis: EdgeBasis, start: complex, end: complex, length: float = 1.0) -> EdgeSolution:
    """Edge solution with y(0) = start and y(length) = end."""
    f1, f2 = basis.functions
    matrix = np.array([[f1(0.0), f2(0.0)], [f1(length), f2(length)]], dtype=np.complex128)
    c1, c2 = np.linalg.solve(matrix, np.array([start, end], dtype=np.complex128))
    return EdgeSolution(basis=basis, c1=complex(c1), c2=complex(c2), length=length)
