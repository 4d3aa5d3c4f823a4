"""
Scenario sampling on the temporal tree.
Path: control/services/sampling.py

All randomness comes from ``numpy.random.Generator(Philox(seed))``; the same
seed always yields the same paths.
"""
import numpy as np

from control.schemas import ScenarioPath
from tree.schemas import TemporalTree


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def sample_path(tree: TemporalTree, seed: int) -> ScenarioPath:
    """Draw one root→leaf path, branching at each interior vertex according to p̃."""
    edges = sample_paths(tree, 1, seed)[0]
    return ScenarioPath(
        choices=tuple(int(tree.state_index[j]) for j in edges[1:]),
        edges=tuple(int(j) for j in edges),
    )


def sample_paths(tree: TemporalTree, count: int, seed: int) -> np.ndarray:
    """``count`` independent paths as an integer array of shape (count, T).

    Children of one vertex are contiguous in breadth-first numbering, so the
    keys parent(ν) + (cumulative p̃ within the block) are increasing and one
    ``searchsorted`` per level picks every child.
    """
    rng = rng_for(seed)
    paths = np.empty((count, tree.horizon), dtype=np.int64)
    paths[:, 0] = 1
    children = np.arange(2, tree.edge_count + 1)
    if children.size == 0:
        return paths
    parents = tree.parent[children]
    running = np.cumsum(tree.p_tilde[children])
    first = np.r_[True, parents[1:] != parents[:-1]]
    before = np.r_[0.0, running][np.flatnonzero(first)]
    block_cumsum = running - before[np.cumsum(first) - 1]
    keys = parents + block_cumsum
    block_total = np.zeros(tree.edge_count + 1)
    np.add.at(block_total, parents, tree.p_tilde[children])

    for level in range(1, tree.horizon):
        current = paths[:, level - 1]
        target = current + rng.random(count) * block_total[current]
        position = np.searchsorted(keys, target, side="right")
        position = np.minimum(position, children.size - 1)
        chosen = children[position]
        # guard the rounding edge where target lands on the block's last key
        overflow = tree.parent[chosen] != current
        if np.any(overflow):
            chosen[overflow] = children[position[overflow] - 1]
        paths[:, level] = chosen
    return paths


def leaf_frequencies(tree: TemporalTree, count: int, seed: int) -> dict[int, float]:
    """Empirical leaf frequencies over ``count`` sampled paths."""
    leaves = sample_paths(tree, count, seed)[:, -1]
    values, counts = np.unique(leaves, return_counts=True)
    return {int(v): c / count for v, c in zip(values, counts)}
