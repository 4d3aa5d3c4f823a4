"""
Mesh discretization of a temporal tree.
Path: oracle/schemas/_instance.py

Every edge carries the nodes t_m = m·h, m = 0..M, h = 1/M. Node 0 of edge j
is vertex k_j and node M is vertex j, so vertex values are shared between
edges by construction (continuity through identification). Global node ids:
vertices 0..E first, then the M-1 interior nodes of every edge in edge order.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from errors import AppError, E
from tree.schemas import TemporalTree

MIN_MESH = 8


@dataclass(frozen=True, eq=False)
class DiscretizedInstance:
    tree: TemporalTree
    mesh: int

    def __post_init__(self):
        if self.mesh < MIN_MESH:
            raise AppError(E.ORACLE__MESH_TOO_COARSE, details={"M": self.mesh, "minimum": MIN_MESH})

    @property
    def h(self) -> float:
        return 1.0 / self.mesh

    @property
    def unknown_count(self) -> int:
        """Grid values before vertex identification: E·(M+1)."""
        return self.tree.edge_count * (self.mesh + 1)

    @property
    def node_count(self) -> int:
        return self.tree.edge_count + 1 + self.tree.edge_count * (self.mesh - 1)

    @cached_property
    def node_index(self) -> np.ndarray:
        """Global node id of (edge j, node m); shape (E+1, M+1), row 0 is unused (-1)."""
        count, mesh = self.tree.edge_count, self.mesh
        index = np.full((count + 1, mesh + 1), -1, dtype=np.int64)
        edges = np.arange(1, count + 1)
        index[1:, 0] = self.tree.parent[1:]
        index[1:, mesh] = edges
        index[1:, 1:mesh] = count + 1 + (edges[:, None] - 1) * (mesh - 1) + np.arange(mesh - 1)[None, :]
        index.setflags(write=False)
        return index

    @cached_property
    def dirichlet_vertices(self) -> np.ndarray:
        """Root vertex 0 and the leaf vertices."""
        return np.concatenate([[0], self.tree.leaves])

