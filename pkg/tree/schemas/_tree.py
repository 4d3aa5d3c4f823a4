"""
The finite temporal tree.
Path: tree/schemas/_tree.py

Edges are numbered 1..E in breadth-first order, the root edge is 1. Every
per-edge array has length E+1; slot 0 stands for the root vertex v_0 (its
parent is -1, its only child is edge 1). Edge j runs from vertex v_{k_j} to
vertex v_j, so "interior vertex j" and "interior edge j" name the same index.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


@dataclass(frozen=True, eq=False)
class TemporalTree:
    """Immutable tree with structure maps, coefficients and path weights."""

    horizon: int
    parent: np.ndarray
    depth: np.ndarray
    b: np.ndarray
    p_tilde: np.ndarray
    alpha: np.ndarray
    state_index: np.ndarray
    children: tuple[tuple[int, ...], ...]
    b_root_defaulted: bool = False
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("parent", "depth", "b", "p_tilde", "alpha", "state_index"):
            getattr(self, name).setflags(write=False)

    @property
    def edge_count(self) -> int:
        return len(self.parent) - 1

    @property
    def edges(self) -> np.ndarray:
        return np.arange(1, self.edge_count + 1)

    @cached_property
    def is_interior(self) -> np.ndarray:
        """Boolean mask over 0..E; True where edge j ends in an interior vertex."""
        mask = np.array([len(c) > 0 for c in self.children], dtype=bool)
        mask[0] = False
        mask.setflags(write=False)
        return mask

    @cached_property
    def interior(self) -> np.ndarray:
        return np.flatnonzero(self.is_interior)

    @cached_property
    def leaves(self) -> np.ndarray:
        mask = ~self.is_interior
        mask[0] = False
        return np.flatnonzero(mask)

    @property
    def leaf_set(self) -> np.ndarray:
        """Alias of ``leaves``: the edges ending at boundary vertices (depth T)."""
        return self.leaves

    def edges_at_depth(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.depth == k)

    def level_sums(self) -> np.ndarray:
        """Σ α_j over the edges of each level k = 1..T."""
        return np.array([self.alpha[self.edges_at_depth(k)].sum() for k in range(1, self.horizon + 1)])

    @property
    def sup_abs_b(self) -> float:
        return float(np.max(np.abs(self.b[1:])))

    @property
    def root_coefficient(self) -> complex:
        return complex(self.b[1])
