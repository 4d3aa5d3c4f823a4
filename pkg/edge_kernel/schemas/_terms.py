"""
Polynomial-times-exponential functions p(t)·e^{λt} and their exact calculus.
Path: edge_kernel/schemas/_terms.py
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from edge_kernel.moments import exp_moments


@dataclass(frozen=True)
class ExpTerm:
    """p(t)·e^{rate·t} with ascending polynomial coefficients."""

    coef: tuple[complex, ...]
    rate: complex

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        return P.polyval(t, np.asarray(self.coef, dtype=np.complex128)) * np.exp(self.rate * t)

    def derivative(self) -> "ExpTerm":
        c = np.asarray(self.coef, dtype=np.complex128)
        return ExpTerm(tuple(P.polyadd(P.polyder(c), self.rate * c)), self.rate)

    def scaled(self, factor: complex) -> "ExpTerm":
        return ExpTerm(tuple(factor * np.asarray(self.coef, dtype=np.complex128)), self.rate)


@dataclass(frozen=True)
class PolyExp:
    """Finite sum of ExpTerms; closed under ℓ, ℒ, scaling and addition."""

    terms: tuple[ExpTerm, ...]

    @classmethod
    def single(cls, coef, rate: complex) -> "PolyExp":
        return cls((ExpTerm(tuple(np.atleast_1d(np.asarray(coef, dtype=np.complex128))), complex(rate)),))

    @classmethod
    def polynomial(cls, coef) -> "PolyExp":
        return cls.single(coef, 0j)

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        total = np.zeros(t.shape, dtype=np.complex128)
        for term in self.terms:
            total = total + term(t)
        return total

    def __add__(self, other: "PolyExp") -> "PolyExp":
        return PolyExp(self.terms + other.terms)

    def __sub__(self, other: "PolyExp") -> "PolyExp":
        return self + other * -1.0

    def __mul__(self, factor: complex) -> "PolyExp":
        return PolyExp(tuple(term.scaled(factor) for term in self.terms))

    __rmul__ = __mul__

    def derivative(self) -> "PolyExp":
        return PolyExp(tuple(term.derivative() for term in self.terms))

    def apply_l(self, b: complex) -> "PolyExp":
        """ℓy = y' + b·y."""
        return self.derivative() + self * b

    def apply_euler_lagrange(self, b: complex) -> "PolyExp":
        """ℒy = -y'' - 2i·Im(b)·y' + |b|²·y."""
        first = self.derivative()
        return first.derivative() * -1.0 + first * (-2j * b.imag) + self * (abs(b) ** 2)

    def inner(self, other: "PolyExp", length: float = 1.0) -> complex:
        """Exact ∫₀ᴸ f·conj(g) dt."""
        total = 0j
        for f in self.terms:
            for g in other.terms:
                prod = P.polymul(np.asarray(f.coef, dtype=np.complex128), np.conj(np.asarray(g.coef, dtype=np.complex128)))
                moments = exp_moments(len(prod) - 1, f.rate + np.conj(g.rate), length)
                total += complex(np.dot(prod, moments))
        return total

    def norm_sq(self, length: float = 1.0) -> float:
        return float(self.inner(self, length).real)
