"""Shared builders for analytic reference states and random systems."""

import numpy as np
import pytest

from molopt import CovarianceMatrix, DirectDrive, SystemParams


def tmsv_cm(r: float) -> CovarianceMatrix:
    """Two-mode squeezed vacuum in (x1, p1, x2, p2) order, vacuum = 1/2."""
    c, s = np.cosh(2 * r), np.sinh(2 * r)
    V = 0.5 * np.array([[c, 0, s, 0],
                        [0, c, 0, -s],
                        [s, 0, c, 0],
                        [0, -s, 0, c]])
    return CovarianceMatrix.from_raw(V)


def pad_with_vacuum(cm: CovarianceMatrix, n_extra_modes: int = 1) -> CovarianceMatrix:
    n = cm.V.shape[0]
    full = 0.5 * np.eye(n + 2 * n_extra_modes)
    full[:n, :n] = cm.V
    return CovarianceMatrix.from_raw(full)


def mode_rotation(n_modes: int, mode: int, phi: float) -> np.ndarray:
    """In-mode phase-space rotation: a local symplectic transformation."""
    S = np.eye(2 * n_modes)
    c, s = np.cos(phi), np.sin(phi)
    S[2 * mode:2 * mode + 2, 2 * mode:2 * mode + 2] = [[c, s], [-s, c]]
    return S


def fig4b_params(**over) -> SystemParams:
    kw = dict(kappa=1 / 3, gamma_1=0.3, gamma_2=0.3, n_th=0.001,
              N_total=100, M_split=50, J_m=0.02, theta=np.pi / 2,
              drive=DirectDrive(0.2, 0.2, 1.5))
    kw.update(over)
    return SystemParams(**kw)


def fig7a_params(**over) -> SystemParams:
    kw = dict(kappa=0.2, gamma_1=1e-3, gamma_2=1e-3, n_th=0.001,
              N_total=200, M_split=100, J_m=0.0, theta=np.pi / 2,
              drive=DirectDrive(0.2, 0.2, 1.5))
    kw.update(over)
    return SystemParams(**kw)


@pytest.fixture
def rng():
    return np.random.default_rng(20250809)
