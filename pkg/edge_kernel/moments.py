"""
Exponential moments m_n(z) = ∫₀¹ tⁿ e^{zt} dt.
Path: edge_kernel/moments.py

Every exact edge integral in the project (energies, Sobolev norms, inner
products with perturbations, variation of constants) reduces to these
moments. Small |z| uses the power series, larger |z| the upward recurrence
m_n = (e^z - n m_{n-1}) / z, which is stable once |z| exceeds n.
"""
import numpy as np

_SERIES_TERMS = 60


def _series(n_max: int, z: np.ndarray) -> np.ndarray:
    # m_n(z) = Σ_k z^k / (k! (n+k+1))
    out = np.zeros(z.shape + (n_max + 1,), dtype=np.complex128)
    term = np.ones_like(z, dtype=np.complex128)
    n = np.arange(n_max + 1)
    for k in range(_SERIES_TERMS):
        out += term[..., None] / (n + k + 1)
        term = term * z / (k + 1)
    return out


def _recurrence(n_max: int, z: np.ndarray) -> np.ndarray:
    out = np.empty(z.shape + (n_max + 1,), dtype=np.complex128)
    ez = np.exp(z)
    out[..., 0] = np.expm1(z) / z
    for n in range(1, n_max + 1):
        out[..., n] = (ez - n * out[..., n - 1]) / z
    return out


def exp_moments(n_max: int, z, length: float = 1.0) -> np.ndarray:
    """∫₀ᴸ tⁿ e^{zt} dt for n = 0..n_max, vectorized over ``z``.

    Returns an array of shape ``np.shape(z) + (n_max + 1,)``. Values that
    overflow come back as ``inf``/``nan``; callers fall back to quadrature.
    """
    z = np.asarray(z, dtype=np.complex128) * length
    small = np.abs(z) <= max(1.0, float(n_max))
    out = np.empty(z.shape + (n_max + 1,), dtype=np.complex128)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if np.any(small):
            out[small] = _series(n_max, z[small])
        if np.any(~small):
            out[~small] = _recurrence(n_max, z[~small])
    if length != 1.0:
        out *= length ** (np.arange(n_max + 1) + 1)
    return out


def exp_moment(n: int, z: complex, length: float = 1.0) -> complex:
    """Scalar m_n(z) on [0, length]."""
    return complex(exp_moments(n, z, length)[n])
