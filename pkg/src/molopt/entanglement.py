"""Bipartite logarithmic negativity and the minimum residual contangle.

Two-mode log-negativity is computed from the determinant (Simon) form of the
partially transposed submatrix; one-vs-two values come from the symplectic
spectrum of the partially transposed 6x6 covariance.  Contangles are squared
log-negativities; the residual per focus mode is the one-vs-two contangle
minus the two pairwise contangles.

All formulas assume the vacuum-variance-1/2 convention of the pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPhysicalCM
from .lyapunov import CovarianceMatrix, symplectic_form

MODE_LABELS = ("a", "B1", "B2")

# Tolerance separating float noise from a genuinely unphysical input.
PHYS_TOL = 1e-12

# Residuals above this (negative) floor count as numerical zero and are
# clamped; the flag on the report records anything below it.
MONOGAMY_FLOOR = -1e-9

_PAIR_SLOTS = {("a", "B1"): (0, 1), ("a", "B2"): (0, 2), ("B1", "B2"): (1, 2)}


@dataclass(frozen=True)
class BipartitionView:
    """4x4 two-mode submatrix split into its 2x2 blocks."""

    Psi_1: np.ndarray
    Psi_2: np.ndarray
    Psi_3: np.ndarray
    pair: tuple[str, str]

    @staticmethod
    def from_covariance(cm: CovarianceMatrix, mode_i: int, mode_j: int) -> "BipartitionView":
        if not 0 <= mode_i < mode_j <= 2:
            raise ValueError("mode indices must satisfy 0 <= i < j <= 2")
        idx = [2 * mode_i, 2 * mode_i + 1, 2 * mode_j, 2 * mode_j + 1]
        sub = cm.V[np.ix_(idx, idx)]
        return BipartitionView(Psi_1=sub[:2, :2], Psi_2=sub[2:, 2:],
                               Psi_3=sub[:2, 2:],
                               pair=(MODE_LABELS[mode_i], MODE_LABELS[mode_j]))

    @property
    def submatrix(self) -> np.ndarray:
        return np.block([[self.Psi_1, self.Psi_3], [self.Psi_3.T, self.Psi_2]])


@dataclass(frozen=True)
class EntanglementReport:
    """All pairwise and one-vs-two measures plus the residual contangle."""

    E_aB1: float
    E_aB2: float
    E_B1B2: float
    E_a_vs_B1B2: float
    E_B1_vs_aB2: float
    E_B2_vs_aB1: float
    residual_a: float
    residual_B1: float
    residual_B2: float
    R_min: float
    monogamy_ok: bool

    @property
    def residuals(self) -> tuple[float, float, float]:
        return (self.residual_a, self.residual_B1, self.residual_B2)

    @property
    def contangles_one_vs_two(self) -> tuple[float, float, float]:
        return (self.E_a_vs_B1B2 ** 2, self.E_B1_vs_aB2 ** 2, self.E_B2_vs_aB1 ** 2)

    @property
    def pairwise(self) -> dict[tuple[str, str], float]:
        return {("a", "B1"): self.E_aB1, ("a", "B2"): self.E_aB2,
                ("B1", "B2"): self.E_B1B2}


def _clamp_nonneg(x: float, tol: float, what: str) -> float:
    """Zero out float noise; anything more negative marks a corrupted input."""
    if x < -tol:
        raise NonPhysicalCM(f"{what} = {x:.3e} is negative beyond tolerance")
    return max(x, 0.0)


def log_negativity_2mode(view: BipartitionView) -> float:
    """E_N of a two-mode covariance from the partial-transpose determinant form.

    nu = sqrt((S - sqrt(S^2 - 4 det Vsub)) / 2) with
    S = det(Psi_1) + det(Psi_2) - 2 det(Psi_3), and E_N = max(0, -ln 2 nu).

    Raises
    ------
    NonPhysicalCM
        The determinant combination has no real symplectic root, which
        signals a corrupted covariance upstream.
    """
    det1 = float(np.linalg.det(view.Psi_1))
    det2 = float(np.linalg.det(view.Psi_2))
    det3 = float(np.linalg.det(view.Psi_3))
    det_sub = float(np.linalg.det(view.submatrix))
    sigma = det1 + det2 - 2.0 * det3

    scale = max(1.0, sigma * sigma)
    disc = _clamp_nonneg(sigma * sigma - 4.0 * det_sub, PHYS_TOL * scale,
                         "PT symplectic discriminant")
    # Separability witness 4 det V - S + 1/4 >= 0 is algebraically equivalent
    # to nu >= 1/2 but free of the subtractive cancellation that makes the
    # sqrt form noisy near the boundary (e.g. at the vacuum).
    if 4.0 * det_sub - sigma + 0.25 >= -PHYS_TOL * scale:
        return 0.0
    nu_sq = _clamp_nonneg(0.5 * (sigma - math.sqrt(disc)), PHYS_TOL * max(1.0, abs(sigma)),
                          "squared PT symplectic eigenvalue")
    if nu_sq == 0.0:
        raise NonPhysicalCM("vanishing PT symplectic eigenvalue (singular covariance)")
    return max(0.0, -math.log(2.0 * math.sqrt(nu_sq)))


def log_negativity_2mode_eig(view: BipartitionView) -> float:
    """Same quantity from the symplectic spectrum of the partially transposed 4x4.

    Independent of the determinant route; the two must agree to 1e-10 on any
    physical input.
    """
    P = np.diag([1.0, 1.0, 1.0, -1.0])
    vt = P @ view.submatrix @ P
    ev = np.abs(np.linalg.eigvals(1j * symplectic_form(2) @ vt))
    nu = float(np.min(ev))
    if nu <= 0.0:
        raise NonPhysicalCM("vanishing PT symplectic eigenvalue (singular covariance)")
    return max(0.0, -math.log(2.0 * nu))


def partial_transpose_matrix(focus: int) -> np.ndarray:
    """Momentum-flip matrix of the focus mode for the 1-vs-2 bipartitions."""
    P = np.eye(6)
    P[2 * focus + 1, 2 * focus + 1] = -1.0
    return P


def log_negativity_one_vs_two(cm: CovarianceMatrix, focus: int) -> float:
    """E_N across the bipartition (focus mode) | (other two modes).

    The focus-mode momentum is sign-flipped (partial transposition) and the
    minimum modulus of the eigenvalues of i*Omega*V~ gives the smallest
    symplectic eigenvalue; E_N = max(0, -ln 2 zeta).
    """
    if cm.V.shape != (6, 6):
        raise ValueError("one-vs-two measures need the full three-mode covariance")
    P = partial_transpose_matrix(focus)
    vt = P @ cm.V @ P
    ev = np.abs(np.linalg.eigvals(1j * symplectic_form(3) @ vt))
    zeta = float(np.min(ev))
    if zeta <= 0.0 or not np.isfinite(zeta):
        raise NonPhysicalCM("vanishing PT symplectic eigenvalue (singular covariance)")
    return max(0.0, -math.log(2.0 * zeta))


def pairwise_log_negativities(cm: CovarianceMatrix) -> dict[tuple[str, str], float]:
    return {pair: log_negativity_2mode(BipartitionView.from_covariance(cm, i, j))
            for pair, (i, j) in _PAIR_SLOTS.items()}


def residual_contangle(cm: CovarianceMatrix) -> EntanglementReport:
    """Minimum residual contangle with full per-bipartition detail.

    For each focus r with partners s, t the residual is
    E_N(r|st)^2 - E_N(r|s)^2 - E_N(r|t)^2.  Raw residuals are reported;
    negatives are clamped to zero for R_min, and monogamy_ok records whether
    all of them sit above the numerical-zero floor.  (The squared
    log-negativity can genuinely dip below zero for mixed states, so a
    violation is diagnostic data, not an abort.)
    """
    pairs = pairwise_log_negativities(cm)
    one_vs_two = [log_negativity_one_vs_two(cm, focus) for focus in range(3)]

    residuals = []
    for focus in range(3):
        others = [m for m in range(3) if m != focus]
        c_split = one_vs_two[focus] ** 2
        for m in others:
            key = tuple(MODE_LABELS[k] for k in sorted((focus, m)))
            c_split -= pairs[key] ** 2
        residuals.append(c_split)

    r_min = max(0.0, min(residuals))
    return EntanglementReport(
        E_aB1=pairs[("a", "B1")], E_aB2=pairs[("a", "B2")],
        E_B1B2=pairs[("B1", "B2")],
        E_a_vs_B1B2=one_vs_two[0], E_B1_vs_aB2=one_vs_two[1],
        E_B2_vs_aB1=one_vs_two[2],
        residual_a=residuals[0], residual_B1=residuals[1],
        residual_B2=residuals[2],
        R_min=r_min,
        monogamy_ok=all(r >= MONOGAMY_FLOOR for r in residuals),
    )
