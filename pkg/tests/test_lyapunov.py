"""Direct Lyapunov solve vs the RK4 integration oracle, and CM invariants."""

import logging

import numpy as np
import pytest

from molopt import (StepSizeTooLarge, UnstableSystem, build_linearized_system,
                    check_stability, lyapunov_residual, solve_lyapunov,
                    solve_steady_state)
from molopt.core import LinearizedSystem
from molopt.lyapunov import (CovarianceMatrix, integrate_lyapunov_ode,
                             integrate_lyapunov_ode_loop)
from molopt.selfcheck import random_stable_system

from conftest import fig4b_params


def plain(A, D):
    return LinearizedSystem(A=np.asarray(A, dtype=float),
                            D=np.asarray(D, dtype=float), G_1=0j, G_2=0j)


class TestDirectSolve:
    def test_isotropic_damping_gives_vacuum(self):
        cm = solve_lyapunov(plain(-0.7 * np.eye(6), 0.7 * np.eye(6)))
        assert np.max(np.abs(cm.V - 0.5 * np.eye(6))) < 1e-14

    def test_scalar_lyapunov_2x2(self):
        cm = solve_lyapunov(plain(np.diag([-1.0, -2.0]), np.eye(2)))
        assert np.allclose(cm.V, np.diag([0.5, 0.25]), atol=1e-14)

    def test_refuses_unstable(self):
        A = np.diag([0.1, -1, -1, -1, -1, -1.0])
        with pytest.raises(UnstableSystem):
            solve_lyapunov(plain(A, np.eye(6)))

    def test_agrees_with_ode_oracle(self, rng):
        for _ in range(10):
            sys = random_stable_system(rng)
            cm = solve_lyapunov(sys)
            t_final = 50.0 / abs(check_stability(sys).abscissa)
            cm_ode = integrate_lyapunov_ode(sys, t_final)
            assert np.max(np.abs(cm.V - cm_ode.V)) < 1e-8
            assert lyapunov_residual(sys, cm) < 1e-10

    def test_residual_and_symmetry_invariants(self, rng):
        for _ in range(25):
            sys = random_stable_system(rng)
            cm = solve_lyapunov(sys)
            assert lyapunov_residual(sys, cm) < 1e-10
            assert np.max(np.abs(cm.V - cm.V.T)) < 1e-10
            assert np.min(np.linalg.eigvalsh(cm.V)) > 0


class TestOdeOracle:
    def test_zero_diffusion_stays_zero(self):
        sys = plain(-0.5 * np.eye(6), np.zeros((6, 6)))
        cm = integrate_lyapunov_ode(sys, t_final=10.0)
        assert np.max(np.abs(cm.V)) == 0.0

    def test_single_mode_relaxation_rate(self):
        # dv/dt = -2 kappa v + kappa: v(t) = (1 - exp(-2 kappa t)) / 2.
        kappa = 0.5
        sys = plain(-kappa * np.eye(2), kappa * np.eye(2))
        for t in (1.0, 2.5, 4.0):
            cm = integrate_lyapunov_ode(sys, t_final=t, dt=t / 2 ** 12)
            expected = 0.5 * (1.0 - np.exp(-2 * kappa * t))
            assert np.allclose(np.diag(cm.V), expected, atol=1e-10)

    def test_doubling_equals_textbook_loop(self, rng):
        sys = random_stable_system(rng)
        dt = 0.01 / np.max(np.abs(np.linalg.eigvals(sys.A)))
        t_final = 97.3 * dt  # arbitrary non-power-of-two step count
        fast = integrate_lyapunov_ode(sys, t_final, dt=dt)
        slow = integrate_lyapunov_ode_loop(sys, t_final, dt=dt)
        assert np.max(np.abs(fast.V - slow.V)) < 1e-12

    def test_rejects_coarse_step(self, rng):
        sys = random_stable_system(rng)
        cap = 0.01 / np.max(np.abs(np.linalg.eigvals(sys.A)))
        with pytest.raises(StepSizeTooLarge):
            integrate_lyapunov_ode(sys, t_final=10.0, dt=3 * cap)

    def test_residual_decreases_and_is_logged(self, rng, caplog):
        sys = random_stable_system(rng)
        with caplog.at_level(logging.DEBUG, logger="molopt.lyapunov"):
            integrate_lyapunov_ode(sys, 50.0 / abs(check_stability(sys).abscissa))
        records = [r for r in caplog.records if "residual" in r.message]
        assert records, "expected residual checkpoints in the log"
        assert not any(r.levelno >= logging.WARNING for r in caplog.records)


class TestPhysicalInvariants:
    def test_thermal_occupancy_monotonicity(self):
        # Extra thermal noise can only add variance to the vibration entries.
        base = fig4b_params()
        prev = None
        for nth in (0.0, 0.001, 0.01, 0.1, 1.0, 5.0):
            p = base.with_updates(n_th=nth)
            cm = solve_lyapunov(build_linearized_system(p, solve_steady_state(p)))
            diag = np.diag(cm.V)[2:]
            if prev is not None:
                assert np.all(diag >= prev - 1e-12)
            prev = diag

    def test_symplectic_floor_on_pipeline_output(self):
        p = fig4b_params()
        cm = solve_lyapunov(build_linearized_system(p, solve_steady_state(p)))
        assert cm.min_symplectic() >= 0.5 - 1e-8
        assert cm.is_physical()

    def test_symplectic_eigenvalues_of_vacuum(self):
        cm = CovarianceMatrix.from_raw(0.5 * np.eye(6))
        assert np.allclose(cm.symplectic_eigenvalues(), 0.5, atol=1e-14)
