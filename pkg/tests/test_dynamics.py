import math

import numpy as np
import pytest

from osctomo import (
    DriveProfile,
    EvaluationError,
    UnsupportedOrderError,
    WronskianDriftError,
    beta_shift,
    hermite,
    hermite_gauss,
    parametric_resonance_epsilon,
    solve_epsilon,
)


class TestSolveEpsilon:
    def test_initial_condition(self, resonance_traj):
        assert resonance_traj.eps[0] == 1.0 + 0.0j
        assert resonance_traj.eps_dot[0] == 1.0j

    def test_constant_frequency_quarter_period(self, constant_traj):
        # analytic solution exp(1j t): eps(pi/2) = 1j, eps_dot(pi/2) = -1
        eps, eps_dot = constant_traj(math.pi / 2.0)
        assert abs(eps - 1.0j) < 1e-10
        assert abs(eps_dot + 1.0) < 1e-10

    def test_free_motion(self, free_traj):
        # eps'' = 0 with the seeded data gives eps = 1 + 1j t exactly
        eps, eps_dot = free_traj(2.0)
        assert abs(eps - (1.0 + 2.0j)) < 1e-10
        assert abs(eps_dot - 1.0j) < 1e-12

    def test_repulsive_oscillator(self):
        # omega_sq = -1: eps = cosh t + 1j sinh t
        traj = solve_epsilon(DriveProfile.custom(lambda t: -1.0), 1.0, 1e-3)
        eps, eps_dot = traj(1.0)
        assert abs(eps - complex(math.cosh(1.0), math.sinh(1.0))) < 1e-10
        assert abs(eps_dot - complex(math.sinh(1.0), math.cosh(1.0))) < 1e-10

    def test_wronskian_conservation(self, constant_traj, free_traj, resonance_traj):
        for traj in (constant_traj, free_traj, resonance_traj):
            assert np.max(np.abs(traj.wronskian() - 2.0j)) <= 1e-8

    def test_fourth_order_convergence(self):
        profile = DriveProfile.constant(1.0)
        errs = []
        for step in (2e-2, 1e-2):
            traj = solve_epsilon(profile, 2.0, step)
            errs.append(np.max(np.abs(traj.eps - np.exp(1j * traj.t))))
        assert errs[0] / errs[1] >= 12.0

    def test_interpolation_accuracy(self, constant_traj):
        for t in (0.37 + 2.5e-4, 11.1112345, 19.9990001):
            eps, eps_dot = constant_traj(t)
            assert abs(eps - np.exp(1j * t)) < 1e-12
            assert abs(eps_dot - 1j * np.exp(1j * t)) < 1e-12

    def test_argument_validation(self):
        profile = DriveProfile.constant(1.0)
        with pytest.raises(ValueError):
            solve_epsilon(profile, -1.0, 1e-3)
        with pytest.raises(ValueError):
            solve_epsilon(profile, 1.0, 0.0)
        with pytest.raises(ValueError):
            solve_epsilon(profile, 1.0, 2.0)

    def test_non_finite_omega(self):
        profile = DriveProfile.custom(lambda t: math.inf if t > 0.5 else 1.0)
        with pytest.raises(EvaluationError):
            solve_epsilon(profile, 1.0, 1e-2)

    def test_wronskian_tolerance_error(self):
        with pytest.raises(WronskianDriftError) as err:
            solve_epsilon(DriveProfile.constant(1.0), 5.0, 1e-3, tol_wronskian=1e-16)
        assert err.value.max_drift > 1e-16

    def test_out_of_range_evaluation(self, free_traj):
        with pytest.raises(ValueError):
            free_traj(20.5)
        with pytest.raises(ValueError):
            free_traj(-0.1)


class TestBetaShift:
    def test_zero_force(self, constant_traj):
        assert beta_shift(constant_traj.profile, constant_traj, 7.3) == 0.0

    def test_constant_force_closed_form(self):
        # oracle: integral_0^t e^{1j s} ds = (e^{1j t} - 1)/1j, so
        # beta(pi) = sqrt(2) and beta(2 pi) = 0
        profile = DriveProfile.constant(1.0, force=lambda t: 1.0)
        traj = solve_epsilon(profile, 2.0 * math.pi, 1e-3)
        assert abs(beta_shift(profile, traj, math.pi) - math.sqrt(2.0)) < 1e-10
        assert abs(beta_shift(profile, traj, 2.0 * math.pi)) < 1e-10

    def test_generic_force_closed_form(self):
        # f(s) = cos(2s): integral e^{1j s} cos 2s ds has the antiderivative
        # [sin(3s)/3 + sin s + 1j (cos s - cos(3s)/3)] / 2 - 1j/3
        profile = DriveProfile.constant(1.0, force=lambda t: math.cos(2.0 * t))
        traj = solve_epsilon(profile, 2.0, 1e-3)
        t = 1.7
        integral = 0.5 * (
            math.sin(3 * t) / 3.0 + math.sin(t)
            + 1j * (math.cos(t) - math.cos(3 * t) / 3.0)
        ) - 1j / 3.0
        expected = -1j / math.sqrt(2.0) * integral
        assert abs(beta_shift(profile, traj, t) - expected) < 1e-10

    def test_additivity(self):
        profile = DriveProfile.constant(1.0, force=lambda t: math.sin(t) + 0.3)
        traj = solve_epsilon(profile, 3.0, 1e-3)
        t1 = 1.2345671  # deliberately off the step grid
        total = beta_shift(profile, traj, 2.9)
        split = beta_shift(profile, traj, t1) + beta_shift(profile, traj, 2.9, t_start=t1)
        assert abs(total - split) < 1e-10

    def test_domain_error(self, constant_traj):
        with pytest.raises(ValueError):
            beta_shift(constant_traj.profile, constant_traj, 21.0)


class TestParametricResonance:
    def test_t_zero(self):
        eps, _ = parametric_resonance_epsilon(0.3, 0.0)
        assert eps == 1.0 + 0.0j

    def test_k_zero_reduces_to_constant_frequency(self):
        for t in (0.0, 1.0, 7.5):
            eps, eps_dot = parametric_resonance_epsilon(0.0, t)
            assert abs(eps - np.exp(1j * t)) < 1e-15
            assert abs(eps_dot - 1j * np.exp(1j * t)) < 1e-15

    def test_matches_ode_solution(self, resonance_traj):
        # the closed form is an O(k) approximation; real and imaginary
        # parts of eps and eps_dot each stay within 5e-2 of the ODE
        eps_a, eps_dot_a = parametric_resonance_epsilon(0.01, 10.0)
        eps_o, eps_dot_o = resonance_traj(10.0)
        for diff in (eps_a - eps_o, eps_dot_a - eps_dot_o):
            assert abs(diff.real) <= 5e-2
            assert abs(diff.imag) <= 5e-2

    def test_k_range_guard(self):
        with pytest.raises(ValueError):
            parametric_resonance_epsilon(0.6, 1.0)
        with pytest.raises(ValueError):
            DriveProfile.parametric_resonance(0.5)


class TestHermite:
    def test_base_cases(self):
        assert hermite(0, 12.7) == 1.0
        assert hermite(1, 0.0) == 0.0

    def test_second_order(self):
        # recurrence by hand: H_2(y) = 4 y^2 - 2, so H_2(1) = 2
        assert hermite(2, 1.0) == 2.0

    def test_third_order_oracle(self):
        for y in (-1.3, 0.2, 2.0):
            assert hermite(3, y) == pytest.approx(8.0 * y**3 - 12.0 * y, rel=1e-14)

    def test_parity(self):
        y = np.linspace(0.1, 3.0, 13)
        for n in range(31):
            np.testing.assert_array_equal(hermite(n, -y), (-1.0) ** n * hermite(n, y))

    def test_order_guard(self):
        with pytest.raises(UnsupportedOrderError):
            hermite(201, 0.5)
        with pytest.raises(ValueError):
            hermite(-1, 0.5)


class TestHermiteGauss:
    def test_matches_direct_formula(self):
        y = np.linspace(-3.0, 3.0, 11)
        for n in range(11):
            direct = (
                hermite(n, y)
                * np.exp(-0.5 * y * y)
                / math.sqrt(math.factorial(n) * 2.0**n * math.sqrt(math.pi))
            )
            np.testing.assert_allclose(hermite_gauss(n, y), direct, atol=1e-14)

    def test_high_order_stays_finite_and_normalised(self):
        y = np.linspace(-30.0, 30.0, 12001)
        u = hermite_gauss(200, y)
        assert np.all(np.isfinite(u))
        assert abs(np.trapezoid(u * u, y) - 1.0) < 1e-6
