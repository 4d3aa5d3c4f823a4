"""
Path queries on the temporal tree: root paths and scenario realizations.
Path: tree/services/paths.py
"""
import math
from dataclasses import dataclass
from typing import Iterator

from errors import AppError, E
from tree.schemas import TemporalTree


@dataclass(frozen=True)
class Realization:
    """One full scenario: leaf edge j, coefficient sequence B_j (root→leaf), probability α_j."""

    leaf: int
    coefficients: tuple[complex, ...]
    probability: float


def _check_edge(tree: TemporalTree, j: int) -> None:
    if not 1 <= j <= tree.edge_count:
        raise AppError(E.TREE__EDGE_OUT_OF_RANGE, details={"edge": j, "edge_count": tree.edge_count})


def path_to_root(tree: TemporalTree, j: int) -> list[int]:
    """[j, k_j, k_j^{2}, ..., 1]; length ν_j + 1 = depth of j."""
    _check_edge(tree, j)
    path = [int(j)]
    while path[-1] != 1:
        path.append(int(tree.parent[path[-1]]))
    return path


def realizations(tree: TemporalTree) -> Iterator[Realization]:
    """Yield every realization of the process, one per leaf, in leaf order."""
    for leaf in tree.leaves:
        edges = path_to_root(tree, int(leaf))[::-1]
        yield Realization(
            leaf=int(leaf),
            coefficients=tuple(complex(tree.b[e]) for e in edges),
            probability=float(tree.alpha[leaf]),
        )


def alpha_product(tree: TemporalTree, j: int) -> float:
    """α_j in product form: ∏ p̃ over the path ℰ_j without the root edge."""
    return math.prod(float(tree.p_tilde[e]) for e in path_to_root(tree, j)[:-1])
