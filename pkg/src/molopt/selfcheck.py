"""Randomized invariant checks backing the `molopt check` command."""

from __future__ import annotations

import math

import numpy as np

from .core import DirectDrive, LinearizedSystem, SystemParams, check_stability
from .darkmode import hybrid_couplings
from .entanglement import (BipartitionView, log_negativity_2mode,
                           log_negativity_2mode_eig, pairwise_log_negativities,
                           residual_contangle)
from .lyapunov import (CovarianceMatrix, integrate_lyapunov_ode,
                       lyapunov_residual, solve_lyapunov)


def random_stable_system(rng: np.random.Generator, n: int = 6,
                         margin_range=(0.3, 1.5)) -> LinearizedSystem:
    """Random drift matrix shifted to a prescribed spectral abscissa, with a
    random positive diagonal diffusion."""
    A = rng.normal(size=(n, n))
    margin = rng.uniform(*margin_range)
    A -= (np.max(np.linalg.eigvals(A).real) + margin) * np.eye(n)
    D = np.diag(rng.uniform(0.1, 2.0, size=n))
    return LinearizedSystem(A=A, D=D, G_1=0j, G_2=0j)


def _embed(block: np.ndarray, modes: tuple[int, ...], n_modes: int) -> np.ndarray:
    S = np.eye(2 * n_modes)
    idx = [q for m in modes for q in (2 * m, 2 * m + 1)]
    S[np.ix_(idx, idx)] = block
    return S


def random_symplectic(rng: np.random.Generator, n_modes: int) -> np.ndarray:
    """Generic symplectic built from rotations, squeezers and mode mixers."""
    S = np.eye(2 * n_modes)
    for _ in range(2):
        for m in range(n_modes):
            phi = rng.uniform(0.0, 2 * math.pi)
            rot = np.array([[math.cos(phi), math.sin(phi)],
                            [-math.sin(phi), math.cos(phi)]])
            r = rng.uniform(-0.7, 0.7)
            sq = np.diag([math.exp(r), math.exp(-r)])
            S = _embed(sq @ rot, (m,), n_modes) @ S
        for m in range(n_modes - 1):
            th = rng.uniform(0.0, 2 * math.pi)
            c, s = math.cos(th), math.sin(th)
            bs = np.array([[c, 0, s, 0], [0, c, 0, s],
                           [-s, 0, c, 0], [0, -s, 0, c]])
            S = _embed(bs, (m, m + 1), n_modes) @ S
    return S


def random_physical_cm(rng: np.random.Generator, n_modes: int = 2,
                       nu_max: float = 3.0) -> CovarianceMatrix:
    """Random physical covariance: symplectic conjugation of a Williamson
    diagonal with eigenvalues >= 1/2."""
    S = random_symplectic(rng, n_modes)
    nus = rng.uniform(0.5, nu_max, size=n_modes)
    W = np.diag(np.repeat(nus, 2))
    return CovarianceMatrix.from_raw(S @ W @ S.T)


def run_self_checks(rng: np.random.Generator, verbose: bool = False) -> bool:
    ok = True

    def report(name, passed, detail=""):
        nonlocal ok
        ok = ok and passed
        if verbose:
            print(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")

    # Lyapunov: direct solve vs RK4 oracle on random stable systems.
    worst_dev, worst_res = 0.0, 0.0
    for _ in range(20):
        sys = random_stable_system(rng)
        cm = solve_lyapunov(sys)
        t_final = 50.0 / abs(check_stability(sys).abscissa)
        cm_ode = integrate_lyapunov_ode(sys, t_final)
        worst_dev = max(worst_dev, float(np.max(np.abs(cm.V - cm_ode.V))))
        worst_res = max(worst_res, lyapunov_residual(sys, cm))
    report("lyapunov solve vs RK4 oracle", worst_dev < 1e-8, f"max dev {worst_dev:.2e}")
    report("lyapunov residual", worst_res < 1e-10, f"max residual {worst_res:.2e}")

    # Two-mode log-negativity: determinant route vs PT symplectic spectrum.
    worst = 0.0
    for _ in range(200):
        view = BipartitionView.from_covariance(random_physical_cm(rng, 3), 0, 1)
        worst = max(worst, abs(log_negativity_2mode(view)
                               - log_negativity_2mode_eig(view)))
    report("two-mode E_N dual-path identity", worst < 1e-10, f"max dev {worst:.2e}")

    # Hybrid couplings conserve the total coupling power.
    worst = 0.0
    for _ in range(100):
        g1, g2 = rng.uniform(0.0, 0.5, size=2)
        params = SystemParams(J_m=rng.uniform(1e-3, 0.1),
                              theta=rng.uniform(0, 2 * math.pi),
                              drive=DirectDrive(g1, g2, 1.0))
        hyb = hybrid_couplings(params, g1, g2)
        worst = max(worst, abs(abs(hyb.Gt_plus) ** 2 + abs(hyb.Gt_minus) ** 2
                               - (g1 * g1 + g2 * g2)))
    report("hybrid coupling norm conservation", worst < 1e-12, f"max dev {worst:.2e}")

    # Vacuum baseline: decoupled, zero-temperature system.
    params = SystemParams(n_th=0.0, J_m=0.0, drive=DirectDrive(0.0, 0.0, 1.5))
    from .core import build_linearized_system, solve_steady_state
    cm = solve_lyapunov(build_linearized_system(params, solve_steady_state(params)))
    dev = float(np.max(np.abs(cm.V - 0.5 * np.eye(6))))
    pairs = pairwise_log_negativities(cm)
    rep = residual_contangle(cm)
    report("vacuum baseline", dev < 1e-10 and max(pairs.values()) < 1e-10
           and rep.R_min < 1e-10, f"V dev {dev:.2e}")
    return ok
