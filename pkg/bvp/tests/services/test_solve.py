"""
Tests for bvp/services/solve.py and bvp/services/solvers.py.
Path: bvp/tests/services/test_solve.py
"""
import importlib
import math

import numpy as np
import pytest

from bvp.schemas import BoundaryData
from bvp.services import (
    assemble,
    compare_backends,
    interval_equivalence,
    solve,
    solve_interval,
    superposition_defect,
)
from bvp.services.solvers import solve_sparse
from errors import AppError, E
from process_model.tests.factories import (
    BoundaryDataFactory,
    ConstantProcessSpecFactory,
    PerLeafSpecFactory,
    ProcessSpecFactory,
)
from tree.services import build_tree


def _shifted_solver(system, order=None):
    coefficients, condition = solve_sparse(system, order)
    coefficients = coefficients.copy()
    coefficients[1:, 1] += 1e-3
    return coefficients, condition


class TestSolveCanonical:
    def test_vertex_value(self, canonical_trajectory, canonical):
        y, _ = canonical_trajectory.values([0.0, 1.0])
        assert y[0, 0] == pytest.approx(1.0, abs=1e-12)
        assert y[0, 1] == pytest.approx(canonical["w"], rel=1e-10)
        assert y[0, 1] == pytest.approx(0.3394348037, abs=1e-9)

    def test_leaf_edges_are_hyperbolic_sines(self, canonical_trajectory, canonical):
        t = np.linspace(0.0, 1.0, 7)
        y, _ = canonical_trajectory.values(t)
        for row, b in ((1, 1.0), (2, 2.0)):
            expected = canonical["w"] * np.sinh(b * (1.0 - t)) / math.sinh(b)
            np.testing.assert_allclose(y[row], expected, atol=1e-12)

    def test_residuals_within_tolerance(self, canonical_trajectory):
        diagnostics = canonical_trajectory.diagnostics
        assert diagnostics.passed
        assert diagnostics.max_residual <= 1e-10 * diagnostics.scale
        assert set(diagnostics.residuals) == {"root", "continuity", "leaf", "kirchhoff"}
        assert diagnostics.condition >= 1.0

    def test_trajectory_is_read_only(self, canonical_trajectory):
        with pytest.raises(ValueError):
            canonical_trajectory.coefficients[1, 0] = 0.0


class TestSolveProperties:
    def test_zero_data_gives_zero_trajectory(self, canonical_tree):
        trajectory = solve(canonical_tree, BoundaryDataFactory(phi0=0.0, phi1=0.0))
        assert np.all(trajectory.coefficients == 0)

    def test_straight_line_when_b_is_zero(self):
        tree = build_tree(ProcessSpecFactory(states=(0.0, 0.0), b_root=0.0, horizon=3))
        trajectory = solve(tree, BoundaryDataFactory(phi0=0.0, phi1=1.0))
        t = np.linspace(0.0, 1.0, 5)
        y, _ = trajectory.values(t)
        expected = (tree.depth[1:, None] - 1 + t[None, :]) / 3.0
        np.testing.assert_allclose(y, expected, atol=1e-12)

    @pytest.mark.parametrize("horizon", [2, 3, 4])
    @pytest.mark.parametrize("states", [2, 3])
    def test_constant_b_matches_interval_solution(self, horizon, states):
        probs = tuple([1.0 / states] * states)
        spec = ConstantProcessSpecFactory(value=1.5 - 0.5j, probs=probs, horizon=horizon)
        trajectory = solve(build_tree(spec), BoundaryData.from_spec(spec))
        assert interval_equivalence(trajectory) <= 1e-10

    def test_constant_b_independent_of_probabilities(self):
        first = ConstantProcessSpecFactory(value=2.0, probs=(0.5, 0.5))
        second = ConstantProcessSpecFactory(value=2.0, probs=(0.1, 0.9))
        y1, _ = solve(build_tree(first), BoundaryData.from_spec(first)).values(np.linspace(0, 1, 5))
        y2, _ = solve(build_tree(second), BoundaryData.from_spec(second)).values(np.linspace(0, 1, 5))
        np.testing.assert_allclose(y1, y2, atol=1e-10)

    def test_same_level_edges_coincide_for_constant_b(self, constant_tree, constant_spec):
        trajectory = solve(constant_tree, BoundaryData.from_spec(constant_spec))
        y, _ = trajectory.values(np.linspace(0.0, 1.0, 5))
        for level in range(1, constant_tree.horizon + 1):
            rows = y[constant_tree.edges_at_depth(level) - 1]
            np.testing.assert_allclose(rows, np.broadcast_to(rows[0], rows.shape), atol=1e-12)

    def test_interval_equivalence_not_applicable(self, canonical_trajectory):
        assert interval_equivalence(canonical_trajectory) is None

    def test_per_leaf_targets_are_hit(self):
        spec = PerLeafSpecFactory()
        tree = build_tree(spec)
        trajectory = solve(tree, BoundaryData.from_spec(spec))
        y, _ = trajectory.values([1.0])
        np.testing.assert_allclose(y[tree.leaves - 1, 0], spec.psi, atol=1e-12)

    def test_superposition(self, complex_tree, complex_spec):
        assert superposition_defect(complex_tree, BoundaryData.from_spec(complex_spec)) <= 1e-10

    def test_backends_agree(self, complex_tree, complex_spec):
        assert compare_backends(complex_tree, BoundaryData.from_spec(complex_spec)) <= 1e-10

    def test_permuted_order_gives_same_solution(self, complex_tree, complex_spec):
        data = BoundaryData.from_spec(complex_spec)
        reference = solve(complex_tree, data).coefficients
        order = np.random.default_rng(3).permutation(complex_tree.edges)
        permuted = solve(complex_tree, data, order=order).coefficients
        np.testing.assert_allclose(permuted, reference, atol=1e-10 * max(1.0, np.abs(reference).max()))

    def test_recursive_backend_diagnostics(self, canonical_tree, canonical_data):
        trajectory = solve(canonical_tree, canonical_data, backend="recursive")
        assert trajectory.diagnostics.backend == "recursive"
        assert trajectory.diagnostics.passed

    def test_unknown_backend(self, canonical_tree, canonical_data):
        with pytest.raises(AppError) as exc_info:
            solve(canonical_tree, canonical_data, backend="dense")
        assert exc_info.value.code == E.CONFIG__INVALID

    def test_residual_breach_raises_with_exit_two(self, canonical_tree, canonical_data, monkeypatch):
        monkeypatch.setattr(importlib.import_module("bvp.services.solve"), "solve_sparse", _shifted_solver)
        with pytest.raises(AppError) as exc_info:
            solve(canonical_tree, canonical_data)
        assert exc_info.value.code == E.BVP__RESIDUAL_BREACH
        assert exc_info.value.exit_code == 2
        assert exc_info.value.details["residuals"]["continuity"] > 0

    def test_check_disabled_returns_trajectory(self, canonical_tree, canonical_data, monkeypatch):
        monkeypatch.setattr(importlib.import_module("bvp.services.solve"), "solve_sparse", _shifted_solver)
        trajectory = solve(canonical_tree, canonical_data, check=False)
        assert not trajectory.diagnostics.passed


class TestSolveInterval:
    def test_value_at_midpoint(self):
        solution = solve_interval(1.0, 2, 1.0, 0.0)
        assert solution.function(1.0) == pytest.approx(1.0 / (2.0 * math.cosh(1.0)), rel=1e-12)

    def test_straight_line_for_zero_coefficient(self):
        solution = solve_interval(0.0, 4, 1.0, 3.0)
        assert solution.function(1.0) == pytest.approx(1.5)

    def test_zero_data_gives_zero_solution(self):
        solution = solve_interval(2.0 + 1.0j, 3, 0.0, 0.0)
        assert solution.c1 == 0 and solution.c2 == 0

    def test_endpoints(self):
        solution = solve_interval(0.5j, 3, 1.0 + 1.0j, -2.0)
        assert solution.function(0.0) == pytest.approx(1.0 + 1.0j, abs=1e-12)
        assert solution.function(3.0) == pytest.approx(-2.0, abs=1e-12)

    def test_horizon_below_one(self):
        with pytest.raises(AppError) as exc_info:
            solve_interval(1.0, 0, 1.0, 0.0)
        assert exc_info.value.code == E.SPEC__INVALID


class TestSolveNearBasisSwitch:
    @staticmethod
    def _spec(real_part):
        b = real_part + 2j
        return ProcessSpecFactory(states=(b, 1.0), probs=(0.5, 0.5), horizon=3, b_root=b, phi0=1.0, phi1=0.3j)

    @pytest.mark.parametrize("backend", ["sparse", "recursive"])
    @pytest.mark.parametrize("real_part", [2e-8, 5e-8, 1e-7, 1e-6])
    def test_small_real_part_outside_the_band_passes_residual_check(self, real_part, backend):
        spec = self._spec(real_part)
        trajectory = solve(build_tree(spec), BoundaryData.from_spec(spec), backend=backend, check=True)
        assert trajectory.generic[1]
        assert trajectory.diagnostics.passed
        assert trajectory.diagnostics.max_residual <= 1e-12 * trajectory.diagnostics.scale

    def test_trajectory_is_continuous_across_the_switch(self):
        t = np.linspace(0.0, 1.0, 5)
        generic_spec, degenerate_spec = self._spec(2e-8), self._spec(5e-9)
        generic = solve(build_tree(generic_spec), BoundaryData.from_spec(generic_spec))
        degenerate = solve(build_tree(degenerate_spec), BoundaryData.from_spec(degenerate_spec))
        assert generic.generic[1] and not degenerate.generic[1]
        np.testing.assert_allclose(generic.values(t)[0], degenerate.values(t)[0], atol=1e-6)


class TestLargeRandomTree:
    @pytest.mark.slow
    @pytest.mark.parametrize("backend", ["sparse", "recursive"])
    def test_ten_thousand_edges(self, backend):
        rng = np.random.default_rng(7)
        states = tuple(complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)) for _ in range(3))
        spec = ProcessSpecFactory(
            states=states,
            probs=(0.2, 0.3, 0.5),
            horizon=9,
            b_root=complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)),
            phi0=1.0 + 0.5j,
            phi1=-0.25j,
        )
        tree = build_tree(spec)
        assert tree.edge_count == (3**9 - 1) // 2

        data = BoundaryData.from_spec(spec)
        counts = assemble(tree, data).group_counts()
        assert sum(counts.values()) == 2 * tree.edge_count
        assert counts == {
            "root": 1,
            "continuity": tree.edge_count - 1,
            "leaf": 3**8,
            "kirchhoff": (3**8 - 1) // 2,
        }

        trajectory = solve(tree, data, backend=backend)
        assert trajectory.diagnostics.passed
