"""System parameters, mean-field steady state, linearized dynamics, stability.

The model is a driven cavity mode coupled to two collective vibration modes
B1, B2 (sub-ensembles of M and N-M molecules) with a phase-modulated
intermode hopping.  All rates are expressed in units of the vibration
frequency, which is 1 internally; the physical angular frequency is kept on
the parameter object only for temperature conversion.

Quadrature ordering throughout: (dx, dy, dQ1, dP1, dQ2, dP2), with the
vacuum variance equal to 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import EigenFailure, InvalidParams, NonConvergence

# Physical angular frequency of the vibration, rad/s (30 THz band).
OMEGA_M_DEFAULT = 2.0 * math.pi * 30e12

# Spectral-abscissa margin treated as the eigenvalue noise floor.
STABILITY_MARGIN = 1e-9

# Mean-field fixed-point iteration controls.
MF_DAMPING = 0.5
MF_TOL = 1e-12
MF_MAX_ITER = 10_000


@dataclass(frozen=True)
class DirectDrive:
    """Enter the linearized system directly: couplings and effective detuning."""

    G_1: float
    G_2: float
    delta_tilde: float
    mode: str = field(default="direct", init=False)


@dataclass(frozen=True)
class PhysicalDrive:
    """Drive the cavity with a field of amplitude E; the mean fields are solved."""

    E_amplitude: float
    mode: str = field(default="physical", init=False)


@dataclass(frozen=True)
class SystemParams:
    """All physical parameters of the two-collective-mode model.

    Rates and frequencies are in units of the vibration frequency
    (omega_1 = omega_2 = 1 for degenerate ensembles).  ``omega_m`` is the
    physical angular frequency in rad/s and only enters thermal-occupancy
    conversions.
    """

    delta_a: float = 1.5
    kappa: float = 1.0 / 3.0
    gamma_1: float = 1e-4
    gamma_2: float = 1e-4
    g_m: float = 1e-4
    J_m: float = 0.0
    theta: float = 0.0
    N_total: int = 100
    M_split: int = 50
    n_th: float = 0.0
    omega_1: float = 1.0
    omega_2: float = 1.0
    omega_m: float = OMEGA_M_DEFAULT
    drive: DirectDrive | PhysicalDrive = DirectDrive(0.0, 0.0, 1.5)

    def __post_init__(self):
        finite = [self.delta_a, self.kappa, self.gamma_1, self.gamma_2,
                  self.g_m, self.J_m, self.theta, self.n_th,
                  self.omega_1, self.omega_2, self.omega_m]
        if not all(math.isfinite(x) for x in finite):
            raise InvalidParams("all rates and frequencies must be finite")
        if self.kappa <= 0 or self.gamma_1 <= 0 or self.gamma_2 <= 0:
            raise InvalidParams("kappa and gamma_k must be positive")
        if min(self.g_m, self.J_m, self.n_th, self.omega_1, self.omega_2,
               self.omega_m) < 0:
            raise InvalidParams("rates, frequencies and n_th must be non-negative")
        if self.N_total < 1:
            raise InvalidParams("N_total must be a positive integer")
        if not 0 <= self.M_split <= self.N_total:
            raise InvalidParams("M_split must satisfy 0 <= M <= N")
        if isinstance(self.drive, DirectDrive):
            if self.drive.G_1 < 0 or self.drive.G_2 < 0:
                raise InvalidParams("direct-mode couplings are real non-negative")
            if not all(math.isfinite(x) for x in
                       (self.drive.G_1, self.drive.G_2, self.drive.delta_tilde)):
                raise InvalidParams("direct-mode drive values must be finite")
        elif isinstance(self.drive, PhysicalDrive):
            if not math.isfinite(self.drive.E_amplitude):
                raise InvalidParams("drive amplitude must be finite")
        else:
            raise InvalidParams(f"unknown drive spec {self.drive!r}")

    @property
    def lam(self) -> float:
        """Collective intermode coupling J_m * sqrt(M (N - M)); never stored."""
        return self.J_m * math.sqrt(self.M_split * (self.N_total - self.M_split))

    @property
    def g_1(self) -> float:
        """Collective optomechanical coupling of sub-ensemble 1, g_m sqrt(M)."""
        return self.g_m * math.sqrt(self.M_split)

    @property
    def g_2(self) -> float:
        """Collective optomechanical coupling of sub-ensemble 2, g_m sqrt(N - M)."""
        return self.g_m * math.sqrt(self.N_total - self.M_split)

    def with_updates(self, **kwargs) -> "SystemParams":
        """Copy with selected fields replaced (drive fields via 'G_1' etc.)."""
        drive_fields = {k: kwargs.pop(k) for k in ("G_1", "G_2", "delta_tilde",
                                                   "E_amplitude") if k in kwargs}
        drive = kwargs.pop("drive", self.drive)
        if drive_fields:
            drive = replace(drive, **drive_fields)
        return replace(self, drive=drive, **kwargs)


@dataclass(frozen=True)
class MeanFields:
    """Steady-state mean amplitudes and the effective cavity detuning."""

    alpha: complex
    beta_1: complex
    beta_2: complex
    delta_tilde: float
    converged: bool
    iterations: int


@dataclass(frozen=True)
class LinearizedSystem:
    """Drift and diffusion matrices of the quadrature fluctuations.

    Quadrature order (dx, dy, dQ1, dP1, dQ2, dP2).  A is the 6x6 real drift
    matrix, D the diagonal diffusion matrix of the Lyapunov equation
    A V + V A^T = -D.
    """

    A: np.ndarray
    D: np.ndarray
    G_1: complex
    G_2: complex


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    abscissa: float
    eigenvalues: np.ndarray


def mean_field_rhs(params: SystemParams, alpha: complex, beta_1: complex,
                   beta_2: complex) -> tuple[complex, complex, complex]:
    """Time derivatives of the mean amplitudes (drive.mode = physical).

    The cavity equation carries the beta-dependent effective detuning, so a
    fixed point of this map is self-consistent in delta_tilde.
    """
    if not isinstance(params.drive, PhysicalDrive):
        raise InvalidParams("mean-field dynamics require a physical drive")
    e_amp = params.drive.E_amplitude
    g1, g2, lam = params.g_1, params.g_2, params.lam
    delta_eff = params.delta_a + 2.0 * (g1 * beta_1.real + g2 * beta_2.real)
    da = -(1j * delta_eff + params.kappa) * alpha - 1j * e_amp
    nbar = abs(alpha) ** 2
    db1 = (-(1j * params.omega_1 + params.gamma_1) * beta_1
           - 1j * g1 * nbar - 1j * lam * np.exp(1j * params.theta) * beta_2)
    db2 = (-(1j * params.omega_2 + params.gamma_2) * beta_2
           - 1j * g2 * nbar - 1j * lam * np.exp(-1j * params.theta) * beta_1)
    return da, db1, db2


def _betas_at_fixed_alpha(params: SystemParams, nbar: float) -> tuple[complex, complex]:
    """Solve the linear 2x2 system for (beta_1, beta_2) at fixed |alpha|^2."""
    lam = params.lam
    mat = np.array([
        [1j * params.omega_1 + params.gamma_1, 1j * lam * np.exp(1j * params.theta)],
        [1j * lam * np.exp(-1j * params.theta), 1j * params.omega_2 + params.gamma_2],
    ])
    rhs = np.array([-1j * params.g_1 * nbar, -1j * params.g_2 * nbar])
    b = np.linalg.solve(mat, rhs)
    return complex(b[0]), complex(b[1])


def solve_steady_state(params: SystemParams) -> MeanFields:
    """Find the mean-field fixed point.

    Physical mode: damped fixed-point iteration on the effective detuning
    with a closed-form cavity amplitude and a linear solve for the betas at
    each step.  Direct mode: the solve is bypassed and the given couplings
    and detuning are passed through with zero amplitudes.

    Raises
    ------
    NonConvergence
        Iteration cap reached; flags possible bistability.
    """
    if isinstance(params.drive, DirectDrive):
        return MeanFields(alpha=0j, beta_1=0j, beta_2=0j,
                          delta_tilde=params.drive.delta_tilde,
                          converged=True, iterations=0)

    e_amp = params.drive.E_amplitude
    g1, g2 = params.g_1, params.g_2
    delta_eff = params.delta_a
    alpha, b1, b2 = 0j, 0j, 0j
    for it in range(1, MF_MAX_ITER + 1):
        alpha = -1j * e_amp / (1j * delta_eff + params.kappa)
        b1, b2 = _betas_at_fixed_alpha(params, abs(alpha) ** 2)
        delta_new = params.delta_a + 2.0 * (g1 * b1.real + g2 * b2.real)
        step = delta_new - delta_eff
        delta_eff += MF_DAMPING * step
        if abs(step) < MF_TOL:
            # Undamped polish: drive the detuning to self-consistency at the
            # noise floor so the fixed-point residuals vanish with it.
            for _ in range(5):
                alpha = -1j * e_amp / (1j * delta_eff + params.kappa)
                b1, b2 = _betas_at_fixed_alpha(params, abs(alpha) ** 2)
                delta_eff = params.delta_a + 2.0 * (g1 * b1.real + g2 * b2.real)
            alpha = -1j * e_amp / (1j * delta_eff + params.kappa)
            b1, b2 = _betas_at_fixed_alpha(params, abs(alpha) ** 2)
            return MeanFields(alpha=alpha, beta_1=b1, beta_2=b2,
                              delta_tilde=delta_eff, converged=True, iterations=it)
    raise NonConvergence(
        f"mean-field iteration did not reach {MF_TOL} in {MF_MAX_ITER} steps; "
        "the drive may be in a bistable regime")


def build_linearized_system(params: SystemParams, mf: MeanFields) -> LinearizedSystem:
    """Assemble the drift and diffusion matrices at the operating point.

    Physical mode takes G_j = g_j * alpha from the solved mean fields;
    direct mode takes the real couplings from the drive spec.
    """
    if isinstance(params.drive, PhysicalDrive):
        if not mf.converged:
            raise InvalidParams("refusing to linearize around an unconverged fixed point")
        G1 = params.g_1 * mf.alpha
        G2 = params.g_2 * mf.alpha
    else:
        G1 = complex(params.drive.G_1)
        G2 = complex(params.drive.G_2)

    dt, kap = mf.delta_tilde, params.kappa
    g1r, g1i = G1.real, G1.imag
    g2r, g2i = G2.real, G2.imag
    w1, w2 = params.omega_1, params.omega_2
    gam1, gam2 = params.gamma_1, params.gamma_2
    lam = params.lam
    ls, lc = lam * math.sin(params.theta), lam * math.cos(params.theta)

    A = np.array([
        [-kap,      dt,       2 * g1i,  0.0,     2 * g2i,  0.0],
        [-dt,       -kap,     -2 * g1r, 0.0,     -2 * g2r, 0.0],
        [0.0,       0.0,      -gam1,    w1,      ls,       lc],
        [-2 * g1r,  -2 * g1i, -w1,      -gam1,   -lc,      ls],
        [0.0,       0.0,      -ls,      lc,      -gam2,    w2],
        [-2 * g2r,  -2 * g2i, -lc,      -ls,     -w2,      -gam2],
    ])
    D = np.diag([kap, kap,
                 gam1 * (2 * params.n_th + 1), gam1 * (2 * params.n_th + 1),
                 gam2 * (2 * params.n_th + 1), gam2 * (2 * params.n_th + 1)])
    return LinearizedSystem(A=A, D=D, G_1=G1, G_2=G2)


def check_stability(sys: LinearizedSystem) -> StabilityVerdict:
    """Routh-Hurwitz-style verdict via the spectral abscissa of the drift matrix."""
    if not np.all(np.isfinite(sys.A)):
        raise InvalidParams("drift matrix contains non-finite entries")
    try:
        eig = np.linalg.eigvals(sys.A)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    abscissa = float(np.max(eig.real))
    return StabilityVerdict(stable=abscissa < -STABILITY_MARGIN,
                            abscissa=abscissa, eigenvalues=eig)
