"""Bright/dark and hybrid vibration-mode transforms.

With no intermode hopping the cavity couples only to the bright combination
B+ of the two collective modes; the orthogonal dark combination B- decouples
entirely when the ensemble frequencies are degenerate.  A nonzero hopping of
strength lambda hybridizes the modes, and the modulation phase theta steers
how the cavity coupling splits between the two hybrid modes: at theta = n*pi
one hybrid mode goes dark, away from it both stay coupled.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import DirectDrive, SystemParams
from .errors import DegenerateCouplings, InvalidParams

# Regime threshold: classification for reporting only, never branched on by
# the covariance pipeline.
DARK_MODE_EPS = 1e-3

DMU = "DMU"
DMB = "DMB"


@dataclass(frozen=True)
class HybridModeData:
    """Couplings and frequencies of the bright/dark and hybrid mode pairs."""

    G_plus: float
    G_minus: float
    Gt_plus: complex
    Gt_minus: complex
    omega_plus: float
    omega_minus: float
    f: float
    h: float
    regime: str


def bright_dark_couplings(G_1: float, G_2: float, omega_1p: float,
                          omega_2p: float) -> tuple[float, float]:
    """Couplings of the bright and dark combinations for zero hopping.

    G+ = sqrt(G1^2 + G2^2) couples to the cavity; the dark-mode coupling
    G- = G1 G2 (w1 - w2) / G+ vanishes for degenerate frequencies.
    """
    G = math.hypot(G_1, G_2)
    if G == 0.0:
        raise DegenerateCouplings("both couplings vanish; no bright mode exists")
    return G, G_1 * G_2 * (omega_1p - omega_2p) / G


def _transform_coefficients(omega_1p: float, omega_2p: float,
                            lam: float) -> tuple[float, float, float, float]:
    """(f, h, omega_minus, omega_plus) of the hybrid-mode rotation.

    The radical uses the frequency difference, which reproduces the
    degenerate limit omega_pm = omega_m +- lambda.
    """
    avg = 0.5 * (omega_1p + omega_2p)
    half_split = 0.5 * math.sqrt((omega_1p - omega_2p) ** 2 + 4.0 * lam * lam)
    w_plus, w_minus = avg + half_split, avg - half_split
    if lam == 0.0:
        if omega_1p != omega_2p:
            raise InvalidParams(
                "hybrid transform undefined at lambda = 0 with split frequencies")
        return 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0), w_minus, w_plus
    x = w_minus - omega_1p
    f = abs(x) / math.sqrt(x * x + lam * lam)
    h = f * lam / x
    return f, h, w_minus, w_plus


def hybrid_couplings(params: SystemParams, G_1: float, G_2: float) -> HybridModeData:
    """Hybrid-mode couplings, frequencies and the regime classification.

    Gt+ = f G1 - e^{-i theta} h G2 and Gt- = f G2 + e^{+i theta} h G1; the
    unitarity of the mode rotation conserves |Gt+|^2 + |Gt-|^2 = G1^2 + G2^2.
    """
    if G_1 < 0 or G_2 < 0:
        raise InvalidParams("couplings are real non-negative by convention")
    f, h, w_minus, w_plus = _transform_coefficients(params.omega_1, params.omega_2,
                                                    params.lam)
    phase = cmath.exp(1j * params.theta)
    gt_plus = f * G_1 - h * G_2 / phase
    gt_minus = f * G_2 + h * G_1 * phase

    if G_1 == 0.0 and G_2 == 0.0:
        g_plus, g_minus = 0.0, 0.0
        regime = DMU
    else:
        g_plus, g_minus = bright_dark_couplings(G_1, G_2, params.omega_1,
                                                params.omega_2)
        lo, hi = sorted((abs(gt_plus), abs(gt_minus)))
        regime = DMU if lo < DARK_MODE_EPS * hi else DMB

    return HybridModeData(G_plus=g_plus, G_minus=g_minus,
                          Gt_plus=gt_plus, Gt_minus=gt_minus,
                          omega_plus=w_plus, omega_minus=w_minus,
                          f=f, h=h, regime=regime)


def polar_coupling_profile(params: SystemParams, n_theta: int) -> np.ndarray:
    """|Gt+| and |Gt-| on a uniform theta grid over [0, 2 pi).

    Returns an (n_theta, 3) array of rows (theta, |Gt+|, |Gt-|).  Requires a
    direct-mode drive so the couplings are explicit inputs.
    """
    if n_theta < 8:
        raise InvalidParams("polar profile needs at least 8 grid points")
    if not isinstance(params.drive, DirectDrive):
        raise InvalidParams("polar profile reads couplings from a direct-mode drive")
    g1, g2 = params.drive.G_1, params.drive.G_2
    rows = np.empty((n_theta, 3))
    for k, theta in enumerate(np.linspace(0.0, 2.0 * math.pi, n_theta, endpoint=False)):
        data = hybrid_couplings(params.with_updates(theta=float(theta)), g1, g2)
        rows[k] = (theta, abs(data.Gt_plus), abs(data.Gt_minus))
    return rows
