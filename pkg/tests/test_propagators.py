import cmath
import math

import numpy as np
import pytest

from helpers import driven_state
from osctomo import (
    CausticError,
    ClassicalPropagator,
    DriveProfile,
    MdfSample,
    beta_shift,
    coherent_mdf,
    fock_mdf,
    fokker_planck_residual,
    green_driven,
    green_free,
    green_sho,
    quantum_propagator,
    quantum_propagator_from_shift,
    solve_epsilon,
)


def propagator_at(t, force=1.0):
    return ClassicalPropagator.from_epsilon(*driven_state(t, force), t)


class TestFrameMap:
    def test_identity_at_t0(self):
        prop = ClassicalPropagator.from_epsilon(1.0, 1.0j, 0.0, 0.0)
        assert prop.frame_map(0.7, -0.2, 1.4) == (0.7, -0.2, 1.4)

    def test_quarter_period_rotation(self):
        prop = propagator_at(math.pi / 2.0, force=0.0)
        x, mu, nu = prop.frame_map(0.3, 1.0, 0.0)
        assert (x, mu, nu) == pytest.approx((0.3, 0.0, 1.0), abs=1e-12)

    def test_full_period_is_identity(self):
        # via the solved ODE rather than the analytic solution
        prop = ClassicalPropagator.from_profile(DriveProfile.constant(1.0), 2.0 * math.pi)
        for point in ((0.3, 1.0, 0.0), (-1.2, 0.4, 0.9)):
            assert prop.frame_map(*point) == pytest.approx(point, abs=1e-8)

    def test_group_property(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            t1, t2 = rng.uniform(0.1, 3.0, size=2)
            pa, pb, pc = propagator_at(t1, 0.0), propagator_at(t2, 0.0), propagator_at(t1 + t2, 0.0)
            point = (rng.normal(), rng.normal(), rng.normal())
            if abs(point[1]) + abs(point[2]) < 1e-3:
                continue
            composed = pa.frame_map(*pb.frame_map(*point))
            assert composed == pytest.approx(pc.frame_map(*point), abs=1e-8)

    def test_degenerate_frame_rejected(self):
        with pytest.raises(ValueError):
            propagator_at(1.0).frame_map(0.3, 0.0, 0.0)

    def test_matrix_and_epsilon_forms_agree_on_random_inputs(self):
        # frame_map raises ConsistencyError whenever its Lambda^-1 form and
        # its explicit eps-form differ by more than 1e-10
        rng = np.random.default_rng(17)
        for _ in range(50):
            t = rng.uniform(0.05, 6.0)
            prop = propagator_at(t, force=rng.uniform(-1.0, 1.0))
            X, mu, nu = rng.normal(scale=2.0, size=3)
            if mu * mu + nu * nu < 1e-3:
                continue
            prop.frame_map(X, mu, nu)

    def test_linear_part_has_unit_determinant(self):
        prop = propagator_at(2.2)
        base = prop.frame_map(0.0, 0.0, 1.0)
        col_mu = prop.frame_map(0.0, 1.0, 1.0)
        col_nu = prop.frame_map(0.0, 0.0, 2.0)
        a11, a12 = col_nu[2] - base[2], col_mu[2] - base[2]
        a21, a22 = col_nu[1] - base[1], col_mu[1] - base[1]
        assert abs(a11 * a22 - a12 * a21 - 1.0) < 1e-12


class TestEvolve:
    def test_identity_at_t0(self):
        prop = ClassicalPropagator.from_epsilon(1.0, 1.0j, 0.0, 0.0)
        w0 = lambda X, mu, nu: coherent_mdf(0.3 + 0.1j, 1.0, 1.0j, 0.0, X, mu, nu)
        assert prop.evolve(w0, 0.4, 0.8, 0.6) == w0(0.4, 0.8, 0.6)

    def test_coherent_pushforward_matches_closed_form(self):
        alpha = 0.7 + 0.3j
        w0 = lambda X, mu, nu: coherent_mdf(alpha, 1.0, 1.0j, 0.0, X, mu, nu)
        for t in (0.6, 1.7, 3.1):
            eps, eps_dot, beta = driven_state(t)
            prop = ClassicalPropagator.from_epsilon(eps, eps_dot, beta, t)
            for X in np.linspace(-3.0, 3.0, 7):
                for mu, nu in ((1.0, 0.0), (0.0, 1.0), (0.6, 0.8)):
                    evolved = prop.evolve(w0, X, mu, nu)
                    closed = coherent_mdf(alpha, eps, eps_dot, beta, X, mu, nu)
                    assert evolved == pytest.approx(closed, abs=1e-10)

    @pytest.mark.parametrize(
        "w0",
        [
            lambda x, mu, nu: fock_mdf(2, 1.0, 1.0j, 0.0, x, mu, nu),
            lambda x, mu, nu: coherent_mdf(0.7 + 0.3j, 1.0, 1.0j, 0.0, x, mu, nu),
        ],
        ids=["fock2", "coherent"],
    )
    def test_pushforward_stays_normalised(self, w0):
        X = np.linspace(-12.0, 12.0, 2401)
        for t in (0.5, 1.0, 3.0):
            prop = propagator_at(t)
            for angle in (0.0, 0.8, 2.1):
                mu, nu = math.cos(angle), math.sin(angle)
                vals = np.array([prop.evolve(w0, xi, mu, nu) for xi in X])
                assert abs(np.trapezoid(vals, X) - 1.0) < 1e-6

    def test_sample_wrapper_validates(self):
        prop = propagator_at(1.0)
        w0 = lambda X, mu, nu: coherent_mdf(0.0, 1.0, 1.0j, 0.0, X, mu, nu)
        sample = prop.sample(w0, 0.3, 1.0, 0.2)
        assert sample.value >= 0.0 and sample.t == 1.0
        with pytest.raises(ValueError):
            MdfSample(0.0, 1.0, 0.0, 0.0, -0.5)


class TestFokkerPlanckResidual:
    def test_constant_function_exact_zero(self):
        profile = DriveProfile.constant(1.0)
        w = lambda X, mu, nu, t: 1.0
        assert fokker_planck_residual(w, profile, (0.3, 0.8, 0.6, 0.9), 1e-3) == 0.0

    @pytest.mark.parametrize("force", [0.0, 1.0])
    def test_coherent_closed_form_second_order(self, force):
        profile = DriveProfile.constant(1.0, force=lambda t, c=force: c)
        alpha = 0.7 + 0.3j

        def w(X, mu, nu, t):
            eps, eps_dot, beta = driven_state(t, force)
            return coherent_mdf(alpha, eps, eps_dot, beta, X, mu, nu)

        point = (0.3, 0.8, 0.6, 0.9)
        res_h = abs(fokker_planck_residual(w, profile, point, 1e-3))
        res_2h = abs(fokker_planck_residual(w, profile, point, 2e-3))
        assert res_h <= 1e-5
        assert 3.5 <= res_2h / res_h <= 4.5

    def test_fock_closed_form_with_ode_epsilon(self):
        profile = DriveProfile.parametric_resonance(0.01)
        traj = solve_epsilon(profile, 3.0, 1e-3)

        def w(X, mu, nu, t):
            eps, eps_dot = traj(t)
            return fock_mdf(2, eps, eps_dot, 0.0, X, mu, nu)

        point = (0.5, 0.7, 0.7, 1.5)
        res_h = abs(fokker_planck_residual(w, profile, point, 1e-3))
        res_2h = abs(fokker_planck_residual(w, profile, point, 2e-3))
        assert res_h < 1e-4
        assert 3.0 <= res_2h / res_h <= 5.0


class TestGreenFunctions:
    def test_free_modulus(self):
        for X, Z in ((0.0, 0.0), (0.3, 0.7), (-2.0, 1.4)):
            assert abs(green_free(X, Z, 1.0)) == pytest.approx(
                (2.0 * math.pi) ** -0.5, abs=1e-14
            )

    def test_sho_at_focus_free_centre(self):
        # exponent vanishes at X = Z = 0, t = pi/2
        assert green_sho(0.0, 0.0, math.pi / 2.0) == pytest.approx(
            (2.0 * math.pi) ** -0.5, abs=1e-12
        )

    def test_sho_small_time_limit_is_free(self):
        t = 1e-2
        for X, Z in ((0.3, 0.4), (-0.2, 0.5), (0.1, -0.3)):
            g_s, g_f = green_sho(X, Z, t), green_free(X, Z, t)
            assert abs(g_s - g_f) / abs(g_f) <= 1e-3

    def test_driven_zero_force_is_sho(self):
        profile = DriveProfile.constant(1.0)
        for X, Z, t in ((0.4, -0.7, 1.1), (1.3, 0.2, 2.6)):
            assert green_driven(X, Z, t, profile) == pytest.approx(green_sho(X, Z, t), abs=1e-14)

    def test_driven_force_integrals_oracle(self):
        # f = 1, t = pi/2: both Simpson integrals equal 1 exactly, so the
        # driven kernel is the oscillator kernel times exp(1j (X + Z))
        profile = DriveProfile.constant(1.0, force=lambda t: 1.0)
        t = math.pi / 2.0
        for X, Z in ((0.0, 0.0), (0.8, -0.3)):
            ratio = green_driven(X, Z, t, profile) / green_sho(X, Z, t)
            assert ratio == pytest.approx(cmath.exp(1j * (X + Z)), abs=1e-9)

    def test_driven_modulus_is_force_independent(self):
        profile = DriveProfile.constant(1.0, force=lambda t: math.cos(t) + 0.5)
        for t in (0.7, 2.0):
            val = abs(green_driven(1.2, -0.4, t, profile))
            assert val == pytest.approx(1.0 / math.sqrt(2.0 * math.pi * abs(math.sin(t))), abs=1e-12)

    def test_caustic_errors(self):
        with pytest.raises(CausticError):
            green_sho(0.1, 0.2, math.pi)
        with pytest.raises(CausticError):
            green_free(0.1, 0.2, 0.0)
        with pytest.raises(CausticError):
            green_driven(0.1, 0.2, 2.0 * math.pi, DriveProfile.constant(1.0))

    def test_driven_requires_unit_constant_profile(self):
        with pytest.raises(ValueError):
            green_driven(0.0, 0.0, 1.0, DriveProfile.parametric_resonance(0.01))
        with pytest.raises(ValueError):
            green_driven(0.0, 0.0, 1.0, DriveProfile.constant(2.0))


class TestQuantumPropagator:
    def test_equal_arguments_real_positive(self):
        profile = DriveProfile.constant(1.0, force=lambda t: 0.7)
        k = quantum_propagator(0.6, 0.6, -0.4, -0.4, 1.3, profile)
        assert abs(k.imag) < 1e-16
        assert k.real > 0.0

    def test_matches_shift_form(self):
        # independent closed form: force enters through beta only
        profile = DriveProfile.constant(1.0, force=lambda t: math.cos(0.7 * t) + 0.4)
        for t in (0.9, 1.3, 2.7):
            traj = solve_epsilon(profile, t, 1e-3)
            beta = beta_shift(profile, traj, t)
            for X, Xp, Z, Zp in ((0.4, -0.2, 0.1, 0.9), (-1.1, 0.5, 0.7, -0.6)):
                direct = quantum_propagator(X, Xp, Z, Zp, t, profile)
                shifted = quantum_propagator_from_shift(X, Xp, Z, Zp, t, beta)
                assert abs(direct - shifted) <= 1e-8

    def test_phase_convention_cancels(self):
        profile = DriveProfile.constant(1.0, force=lambda t: 1.0)
        args = (0.4, -0.2, 0.1, 0.9, 1.3)
        k0 = quantum_propagator(*args, profile, phase=0.0)
        k1 = quantum_propagator(*args, profile, phase=0.37 * args[4])
        assert abs(k0 - k1) <= 1e-12
