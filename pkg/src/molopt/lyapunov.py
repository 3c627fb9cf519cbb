"""Steady-state covariance matrix: direct Lyapunov solve and an ODE oracle.

The direct path vectorizes A V + V A^T = -D into a dense Kronecker linear
system, which is exact and cheap at 6x6.  The oracle integrates
dV/dt = A V + V A^T + D with classical RK4 from V(0) = 0; the two paths
validate each other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .core import LinearizedSystem, check_stability
from .errors import SolverFailure, StepSizeTooLarge, UnstableSystem

log = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-10
SYMMETRY_TOL = 1e-10
SYMPLECTIC_FLOOR = 0.5 - 1e-8


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal [[0, 1], [-1, 0]] form in (x1, p1, x2, p2, ...) order."""
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True)
class CovarianceMatrix:
    """Symmetric steady-state covariance of the quadrature vector.

    For the full system the order is (dx, dy, dQ1, dP1, dQ2, dP2) and a
    physical state has every symplectic eigenvalue >= 1/2.
    """

    V: np.ndarray

    @staticmethod
    def from_raw(V: np.ndarray) -> "CovarianceMatrix":
        return CovarianceMatrix(V=0.5 * (V + V.T))

    def symplectic_eigenvalues(self) -> np.ndarray:
        """Moduli of the paired eigenvalues of i*Omega*V, ascending, one per mode."""
        n_modes = self.V.shape[0] // 2
        ev = np.linalg.eigvals(1j * symplectic_form(n_modes) @ self.V)
        return np.sort(np.abs(ev))[::2]

    def min_symplectic(self) -> float:
        return float(self.symplectic_eigenvalues()[0])

    def is_physical(self, floor: float = SYMPLECTIC_FLOOR) -> bool:
        return bool(self.min_symplectic() >= floor)


def lyapunov_residual(sys: LinearizedSystem, cm: CovarianceMatrix) -> float:
    """Max-norm of A V + V A^T + D."""
    R = sys.A @ cm.V + cm.V @ sys.A.T + sys.D
    return float(np.max(np.abs(R)))


def solve_lyapunov(sys: LinearizedSystem) -> CovarianceMatrix:
    """Solve A V + V A^T = -D for the steady-state covariance.

    Refuses unstable systems: the algebraic solution exists there but is not
    a physical steady state.

    Raises
    ------
    UnstableSystem
        Spectral abscissa of A is not negative.
    SolverFailure
        The Kronecker system is singular or the residual check fails.
    """
    verdict = check_stability(sys)
    if not verdict.stable:
        raise UnstableSystem(f"spectral abscissa {verdict.abscissa:.3e} >= 0")
    cm = _solve_lyapunov_unchecked(sys.A, sys.D)
    res = lyapunov_residual(sys, cm)
    if not np.isfinite(res) or res > RESIDUAL_TOL * max(1.0, float(np.max(np.abs(sys.D)))):
        raise SolverFailure(f"Lyapunov residual {res:.3e} above tolerance")
    return cm


def _solve_lyapunov_unchecked(A: np.ndarray, D: np.ndarray) -> CovarianceMatrix:
    """Kronecker-vectorized dense solve, no stability or residual guard."""
    n = A.shape[0]
    eye = np.eye(n)
    M = np.kron(eye, A) + np.kron(A, eye)
    try:
        v = np.linalg.solve(M, -D.flatten(order="F"))
    except np.linalg.LinAlgError as exc:
        raise SolverFailure(str(exc)) from exc
    return CovarianceMatrix.from_raw(v.reshape((n, n), order="F"))


def _rk4_affine_step(A: np.ndarray, D: np.ndarray, dt: float):
    """One-step RK4 map V -> R(V) + C for the linear ODE dV/dt = L(V) + D.

    L(V) = A V + V A^T is linear, so the classical RK4 update collapses to a
    fixed affine map: R is the degree-4 stability polynomial of dt*L and C
    collects the inhomogeneous D contributions.  Both are returned in the
    n^2-dimensional vectorized representation.
    """
    n = A.shape[0]
    eye_n = np.eye(n)
    L = dt * (np.kron(eye_n, A) + np.kron(A, eye_n))
    eye = np.eye(n * n)
    R = eye + L @ (eye + L @ (eye / 2 + L @ (eye / 6 + L / 24)))
    C = dt * ((eye + L @ (eye / 2 + L @ (eye / 6 + L / 24))) @ D.flatten(order="F"))
    return R, C


def integrate_lyapunov_ode(sys: LinearizedSystem, t_final: float,
                           dt: float | None = None) -> CovarianceMatrix:
    """Integrate dV/dt = A V + V A^T + D from V(0) = 0 with classical RK4.

    Verification oracle for :func:`solve_lyapunov`.  The step must resolve
    the fastest eigenfrequency (dt <= 0.01 / max|eig A|); by default that cap
    is used.  Because the ODE is linear, the RK4 recursion is applied through
    repeated squaring of its one-step affine map, which reproduces the plain
    step-by-step result exactly while keeping long horizons cheap.

    Raises
    ------
    StepSizeTooLarge
        The requested dt exceeds the resolution cap.
    """
    A, D = sys.A, sys.D
    dt_cap = 0.01 / max(float(np.max(np.abs(np.linalg.eigvals(A)))), 1e-300)
    if dt is None:
        dt = dt_cap
    if dt > dt_cap * (1 + 1e-12):
        raise StepSizeTooLarge(f"dt={dt:.3e} exceeds resolution cap {dt_cap:.3e}")

    n_steps = max(1, int(np.ceil(t_final / dt)))
    R, C = _rk4_affine_step(A, D, dt)

    # Apply the affine map n_steps times by binary decomposition, logging the
    # residual at each partial horizon; for a stable system it must decrease.
    v = np.zeros(A.shape[0] ** 2)
    residuals = []
    steps_done = 0
    bit = 1
    R_pow, C_pow = R, C
    while bit <= n_steps:
        if n_steps & bit:
            v = R_pow @ v + C_pow
            steps_done += bit
            res = _residual_vec(A, D, v)
            residuals.append(res)
            log.debug("lyapunov ode: t=%.4g residual=%.3e", steps_done * dt, res)
        bit <<= 1
        if bit <= n_steps:
            C_pow = R_pow @ C_pow + C_pow
            R_pow = R_pow @ R_pow
    # Non-normal drift can push the residual up transiently; net decrease over
    # the horizon is the convergence signal.
    if len(residuals) > 1 and residuals[-1] > residuals[0]:
        log.warning("lyapunov ode residual grew over the horizon: %s", residuals)
    n = A.shape[0]
    return CovarianceMatrix.from_raw(v.reshape((n, n), order="F"))


def _residual_vec(A: np.ndarray, D: np.ndarray, v: np.ndarray) -> float:
    n = A.shape[0]
    V = v.reshape((n, n), order="F")
    return float(np.max(np.abs(A @ V + V @ A.T + D)))


def integrate_lyapunov_ode_loop(sys: LinearizedSystem, t_final: float,
                                dt: float | None = None) -> CovarianceMatrix:
    """Textbook per-step RK4 reference; used to validate the doubling path."""
    A, D = sys.A, sys.D
    dt_cap = 0.01 / max(float(np.max(np.abs(np.linalg.eigvals(A)))), 1e-300)
    if dt is None:
        dt = dt_cap
    if dt > dt_cap * (1 + 1e-12):
        raise StepSizeTooLarge(f"dt={dt:.3e} exceeds resolution cap {dt_cap:.3e}")
    n_steps = max(1, int(np.ceil(t_final / dt)))

    def rhs(V):
        W = A @ V
        return W + W.T + D

    V = np.zeros_like(A)
    for _ in range(n_steps):
        k1 = rhs(V)
        k2 = rhs(V + 0.5 * dt * k1)
        k3 = rhs(V + 0.5 * dt * k2)
        k4 = rhs(V + dt * k3)
        V = V + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return CovarianceMatrix.from_raw(V)
