"""
Shared fixtures for every app's tests (registered project-wide by the root conftest).
Path: process_model/tests/conftest.py
"""

import math

import pytest
import yaml

from bvp.schemas import BoundaryData
from bvp.services import solve
from control.services import extract_controls
from process_model.tests.factories import (
    ComplexProcessSpecFactory,
    ConstantProcessSpecFactory,
    ProcessSpecFactory,
)
from tree.services import build_tree


def canonical_values() -> dict:
    """Closed-form optimum of the canonical instance (θ = (1, 2), p = (½, ½), b₁ = 1, T = 2, φ₀ = 1, φ₁ = 0).

    Leaf edges are y = w·sinh(b(1-t))/sinh b; the root edge y = A e^{-t} + B e^{t}
    with A + B = 1 and the Kirchhoff condition at the branching vertex.
    """
    coth = lambda x: 1.0 / math.tanh(x)  # noqa: E731
    e2 = math.exp(2.0)
    kappa = 0.5 * coth(1.0) + coth(2.0) - 0.5
    B = (1.0 - kappa) / (e2 * (1.0 + kappa) + 1.0 - kappa)
    A = 1.0 - B
    w = A * math.exp(-1.0) + B * math.e
    energy = 2.0 * B**2 * (e2 - 1.0) + 0.5 * w**2 * ((coth(1.0) - 1.0) + 2.0 * (coth(2.0) - 1.0))
    return {"A": A, "B": B, "w": w, "J": energy}


@pytest.fixture(scope="session")
def canonical():
    return canonical_values()


@pytest.fixture
def canonical_spec():
    return ProcessSpecFactory()


@pytest.fixture
def canonical_tree(canonical_spec):
    return build_tree(canonical_spec)


@pytest.fixture
def canonical_data(canonical_spec):
    return BoundaryData.from_spec(canonical_spec)


@pytest.fixture
def canonical_trajectory(canonical_tree, canonical_data):
    return solve(canonical_tree, canonical_data)


@pytest.fixture
def canonical_family(canonical_trajectory):
    return extract_controls(canonical_trajectory)


@pytest.fixture
def constant_spec():
    return ConstantProcessSpecFactory(value=1.0, horizon=3)


@pytest.fixture
def constant_tree(constant_spec):
    return build_tree(constant_spec)


@pytest.fixture
def complex_spec():
    return ComplexProcessSpecFactory()


@pytest.fixture
def complex_tree(complex_spec):
    return build_tree(complex_spec)


@pytest.fixture
def complex_trajectory(complex_tree, complex_spec):
    return solve(complex_tree, BoundaryData.from_spec(complex_spec))


@pytest.fixture
def out_dir(tmp_path):
    """Fresh output directory for CLI runs."""
    path = tmp_path / "out"
    path.mkdir()
    return path


@pytest.fixture
def write_config(tmp_path):
    """Write a run config mapping to YAML and return its path."""

    def _write(payload: dict, name: str = "run.yaml"):
        path = tmp_path / name
        path.write_text(yaml.safe_dump(payload, sort_keys=False), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def canonical_config():
    """Run config payload of the canonical instance."""
    return {
        "states": [1.0, 2.0],
        "probs": [0.5, 0.5],
        "horizon": 2,
        "b_root": 1.0,
        "phi0": 1.0,
        "phi1": 0.0,
        "seed": 11,
        "solve": {"apriori_samples": 20},
        "verify": {"trials": 20, "meshes": [50, 100, 200], "apriori_samples": 20},
        "oracle": {"meshes": [100, 200]},
    }
