"""
Tests for edge_kernel/services/kernel.py.
Path: edge_kernel/tests/services/test_kernel.py
"""
import math

import numpy as np
import pytest
from scipy import integrate

from edge_kernel.schemas import BasisKind, EdgeSolution
from edge_kernel.services import (
    apply_l,
    edge_energy,
    edge_sobolev,
    euler_lagrange_residual,
    evaluate,
    make_basis,
    solve_two_point,
)
from errors import AppError, E

SAMPLES = np.linspace(0.0, 1.0, 20)


def _quad(func):
    value, _ = integrate.quad(func, 0.0, 1.0, limit=400, epsabs=0.0, epsrel=1e-12)
    return value


def _random_solutions(seed=7, count=6):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        b = complex(*rng.uniform(-4, 4, size=2))
        c1, c2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        yield EdgeSolution(basis=make_basis(b), c1=complex(c1), c2=complex(c2))


class TestMakeBasis:
    def test_real_coefficient_is_generic_with_opposite_exponents(self):
        basis = make_basis(1.0)
        assert basis.kind is BasisKind.GENERIC
        assert basis.exponents == (-1.0, 1.0)

    def test_imaginary_coefficient_is_degenerate(self):
        basis = make_basis(2j)
        assert basis.kind is BasisKind.DEGENERATE
        assert basis.exponents == (-2j, -2j)
        f1, f2 = basis.functions
        assert f2(0.5) == pytest.approx(0.5 * np.exp(-1j))

    def test_zero_coefficient_gives_constant_and_linear_basis(self):
        f1, f2 = make_basis(0.0).functions
        assert f1(0.3) == pytest.approx(1.0)
        assert f2(0.3) == pytest.approx(0.3)

    @pytest.mark.parametrize("b", [1.0, 2j, 0.0, -3 + 1j, 0.5 - 2.5j])
    def test_exponents_are_characteristic_roots(self, b):
        b = complex(b)
        for lam in make_basis(b).exponents:
            assert abs(lam**2 + 2j * b.imag * lam - abs(b) ** 2) <= 1e-12 * (1 + abs(b)) ** 2

    @pytest.mark.parametrize("b", [1.0, 2j, 0.0, -3 + 1j, 4 - 4j, 0.1 + 1j, 3e-8 - 2j])
    def test_basis_functions_annihilate_euler_lagrange_operator(self, b):
        b = complex(b)
        for f in make_basis(b).functions:
            residual = f.apply_euler_lagrange(b)(SAMPLES)
            assert np.max(np.abs(residual)) <= 1e-12 * (1 + abs(b)) ** 2 * math.exp(abs(b))

    def test_explicit_tolerance_moves_the_switch(self):
        assert make_basis(1e-6 + 1j, tol=1e-5).kind is BasisKind.DEGENERATE
        assert make_basis(1e-6 + 1j, tol=1e-8).kind is BasisKind.GENERIC

    @pytest.mark.parametrize("b", [1.0 + 1j, 0.1 + 1j, 2e-8 + 3j, -0.2 - 0.5j])
    def test_generic_second_function_is_scaled_exponential_difference(self, b):
        f1, f2 = make_basis(b).functions
        a = 2.0 * b.real
        expected = (np.exp(b.conjugate() * SAMPLES) - np.exp(-b * SAMPLES)) / a
        assert f2(0.0) == 0.0
        np.testing.assert_allclose(f2(SAMPLES), expected, rtol=1e-12 if abs(a) > 1e-3 else 1e-6, atol=1e-15)

    def test_second_function_on_a_long_interval(self):
        basis = make_basis(0.1 + 1j)
        _, f2 = basis.functions_on(6.0)
        t = np.linspace(0.0, 6.0, 13)
        expected = (np.exp((0.1 - 1j) * t) - np.exp(-(0.1 + 1j) * t)) / 0.2
        np.testing.assert_allclose(f2(t), expected, rtol=1e-12)

    def test_control_of_second_function_has_unit_amplitude(self):
        for b in (1.0 + 1j, 2j, 1e-7 + 1j):
            basis = make_basis(b)
            _, f2 = basis.functions
            np.testing.assert_allclose(f2.apply_l(b)(SAMPLES), np.exp(basis.control_rate * SAMPLES), rtol=1e-12)


class TestEvaluate:
    def test_linear_case(self):
        sol = EdgeSolution(basis=make_basis(0.0), c1=2.0, c2=-3.0)
        y, dy = evaluate(sol, 0.0)
        assert (y, dy) == (pytest.approx(2.0), pytest.approx(-3.0))

    def test_kernel_of_l_satisfies_first_order_equation(self):
        sol = EdgeSolution(basis=make_basis(1.5 - 0.5j), c1=1.0 + 1j, c2=0.0)
        y, dy = evaluate(sol, SAMPLES)
        np.testing.assert_allclose(dy, -(1.5 - 0.5j) * y, rtol=1e-13)

    def test_derivative_matches_central_difference(self):
        h = 1e-6
        for sol in _random_solutions():
            for t in (0.2, 0.5, 0.8):
                y_plus, _ = evaluate(sol, t + h)
                y_minus, _ = evaluate(sol, t - h)
                _, dy = evaluate(sol, t)
                bound = 1e-8 * (1 + abs(sol.b) * math.exp(abs(sol.b))) * (abs(sol.c1) + abs(sol.c2))
                assert abs((y_plus - y_minus) / (2 * h) - dy) <= bound

    @pytest.mark.parametrize("t", [-0.1, 1.5, float("nan")])
    def test_out_of_range_time_is_rejected(self, t):
        sol = EdgeSolution(basis=make_basis(1.0), c1=1.0, c2=1.0)
        with pytest.raises(AppError) as exc:
            evaluate(sol, t)
        assert exc.value.code == E.KERNEL__T_OUT_OF_RANGE


class TestApplyL:
    def test_vanishes_without_second_coefficient(self):
        sol = EdgeSolution(basis=make_basis(-2 + 1j), c1=3.0, c2=0.0)
        np.testing.assert_allclose(apply_l(sol, SAMPLES), 0.0, atol=1e-15)

    def test_generic_value_at_zero(self):
        sol = EdgeSolution(basis=make_basis(1.0), c1=0.0, c2=1.0)
        assert apply_l(sol, 0.0) == pytest.approx(1.0)

    def test_generic_value_scales_with_second_coefficient(self):
        sol = EdgeSolution(basis=make_basis(1.0), c1=0.0, c2=2.0)
        assert apply_l(sol, 0.0) == pytest.approx(2.0)
        assert apply_l(sol, 1.0) == pytest.approx(2.0 * np.e)

    def test_degenerate_closed_form(self):
        sol = EdgeSolution(basis=make_basis(3j), c1=1.0, c2=2.0 - 1j)
        assert apply_l(sol, 0.4) == pytest.approx((2.0 - 1j) * np.exp(-1.2j))

    def test_matches_evaluated_first_order_operator(self):
        for sol in _random_solutions(seed=11):
            y, dy = evaluate(sol, SAMPLES)
            np.testing.assert_allclose(apply_l(sol, SAMPLES), dy + sol.b * y, rtol=1e-12, atol=1e-12)


class TestEdgeEnergy:
    def test_zero_control(self):
        assert edge_energy(EdgeSolution(basis=make_basis(1.0), c1=5.0, c2=0.0)) == 0.0

    def test_identity_coefficient(self):
        assert edge_energy(EdgeSolution(basis=make_basis(0.0), c1=0.0, c2=1.0)) == pytest.approx(1.0)

    def test_unit_coefficient_against_quadrature(self):
        sol = EdgeSolution(basis=make_basis(1.0), c1=0.0, c2=1.0)
        assert edge_energy(sol) == pytest.approx((math.e**2 - 1.0) / 2.0, rel=1e-14)
        assert edge_energy(sol) == pytest.approx(_quad(lambda t: abs(apply_l(sol, t)) ** 2), rel=1e-8)

    def test_random_instances_against_quadrature(self):
        for sol in _random_solutions(seed=3):
            expected = _quad(lambda t: abs(apply_l(sol, t)) ** 2)
            assert edge_energy(sol) == pytest.approx(expected, rel=1e-10)
            assert edge_energy(sol) >= 0.0

    def test_inside_switch_band_is_cancellation_safe(self):
        sol = EdgeSolution(basis=make_basis(1e-12 + 1j), c1=0.0, c2=1.0)
        assert edge_energy(sol) == pytest.approx(1.0, rel=1e-10)

    def test_solution_on_longer_interval(self):
        sol = EdgeSolution(basis=make_basis(0.0), c1=0.0, c2=1.0, length=2.0)
        assert edge_energy(sol) == pytest.approx(2.0)


class TestEdgeSobolev:
    def test_constant_one(self):
        assert edge_sobolev(EdgeSolution(basis=make_basis(0.0), c1=1.0, c2=0.0), 0) == pytest.approx(1.0)

    def test_linear_function_first_order(self):
        sol = EdgeSolution(basis=make_basis(0.0), c1=0.0, c2=1.0)
        assert edge_sobolev(sol, 1) == pytest.approx(4.0 / 3.0)

    @pytest.mark.parametrize("s", [0, 1])
    def test_random_instances_against_quadrature(self, s):
        for sol in _random_solutions(seed=5):
            def integrand(t):
                y, dy = evaluate(sol, t)
                return abs(y) ** 2 + (abs(dy) ** 2 if s == 1 else 0.0)

            assert edge_sobolev(sol, s) == pytest.approx(_quad(integrand), rel=1e-8)

    def test_unsupported_order(self):
        with pytest.raises(AppError) as exc:
            edge_sobolev(EdgeSolution(basis=make_basis(0.0), c1=1.0, c2=0.0), 2)
        assert exc.value.code == E.KERNEL__INVALID_ORDER


class TestBasisSwitchContinuity:
    def test_generic_and_degenerate_solutions_agree_near_the_switch(self):
        b = 1e-7 + 1.3j
        generic = solve_two_point(make_basis(b, tol=0.0), 1.0, 0.5 - 0.5j)
        degenerate = solve_two_point(make_basis(b, tol=1e-6), 1.0, 0.5 - 0.5j)
        assert generic.basis.kind is BasisKind.GENERIC
        assert degenerate.basis.kind is BasisKind.DEGENERATE
        y_generic, _ = evaluate(generic, SAMPLES)
        y_degenerate, _ = evaluate(degenerate, SAMPLES)
        np.testing.assert_allclose(y_generic, y_degenerate, atol=1e-6)


class TestEulerLagrangeResidual:
    def test_random_solutions_have_negligible_residual(self):
        for sol in _random_solutions(seed=19):
            bound = 1e-12 * (1 + abs(sol.b)) ** 2 * (abs(sol.c1) + abs(sol.c2)) * math.exp(abs(sol.b))
            assert np.max(np.abs(euler_lagrange_residual(sol, SAMPLES))) <= bound
