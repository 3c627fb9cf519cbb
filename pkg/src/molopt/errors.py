"""Exception types shared across the package."""


class MoloptError(Exception):
    """Base class for all package errors."""


class InvalidParams(MoloptError):
    """System parameters violate a documented constraint."""


class NonConvergence(MoloptError):
    """Mean-field iteration hit its cap; possible bistability."""


class EigenFailure(MoloptError):
    """Eigenvalue solver did not converge."""


class UnstableSystem(MoloptError):
    """Drift matrix has a non-negative spectral abscissa; no physical steady state."""


class SolverFailure(MoloptError):
    """Linear solve for the steady-state covariance failed."""


class StepSizeTooLarge(MoloptError):
    """Integrator step does not resolve the fastest system frequency."""


class NonPhysicalCM(MoloptError):
    """Covariance matrix violates the uncertainty principle beyond tolerance."""


class DegenerateCouplings(MoloptError):
    """Bright/dark decomposition undefined because both couplings vanish."""


class ConfigError(MoloptError):
    """Sweep configuration is malformed or inconsistent."""


class UnknownPreset(ConfigError):
    """Requested figure preset name is not defined."""
