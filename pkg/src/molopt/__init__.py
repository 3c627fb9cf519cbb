"""Steady-state Gaussian simulator for dark-mode-controlled molecular optomechanics."""

__version__ = "0.1.0"

from .core import (DirectDrive, LinearizedSystem, MeanFields, PhysicalDrive,
                   StabilityVerdict, SystemParams, build_linearized_system,
                   check_stability, solve_steady_state)
from .darkmode import (HybridModeData, bright_dark_couplings, hybrid_couplings,
                       polar_coupling_profile)
from .entanglement import (BipartitionView, EntanglementReport,
                           log_negativity_2mode, log_negativity_one_vs_two,
                           pairwise_log_negativities, residual_contangle)
from .errors import (ConfigError, DegenerateCouplings, EigenFailure,
                     InvalidParams, MoloptError, NonConvergence, NonPhysicalCM,
                     SolverFailure, StepSizeTooLarge, UnknownPreset,
                     UnstableSystem)
from .lyapunov import (CovarianceMatrix, integrate_lyapunov_ode,
                       lyapunov_residual, solve_lyapunov, symplectic_form)
from .presets import PRESET_NAMES, figure_preset, preset_descriptions
from .sweep import (SweepAxis, SweepResult, SweepSpec, evaluate_point,
                    nth_to_temperature, run_sweep, temperature_to_nth)

__all__ = [
    "BipartitionView", "ConfigError", "CovarianceMatrix", "DegenerateCouplings",
    "DirectDrive", "EigenFailure", "EntanglementReport", "HybridModeData",
    "InvalidParams", "LinearizedSystem", "MeanFields", "MoloptError",
    "NonConvergence", "NonPhysicalCM", "PRESET_NAMES", "PhysicalDrive",
    "SolverFailure", "StabilityVerdict", "StepSizeTooLarge", "SweepAxis",
    "SweepResult", "SweepSpec", "SystemParams", "UnknownPreset",
    "UnstableSystem", "bright_dark_couplings", "build_linearized_system",
    "check_stability", "evaluate_point", "figure_preset", "hybrid_couplings",
    "integrate_lyapunov_ode", "log_negativity_2mode",
    "log_negativity_one_vs_two", "lyapunov_residual", "nth_to_temperature",
    "pairwise_log_negativities", "polar_coupling_profile",
    "preset_descriptions", "residual_contangle", "run_sweep",
    "solve_lyapunov", "solve_steady_state", "symplectic_form",
    "temperature_to_nth",
]
