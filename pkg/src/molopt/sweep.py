"""Configuration-driven parameter sweeps over the covariance pipeline.

A sweep evaluates the full chain (mean fields if physically driven, then
linearization, stability, Lyapunov solve and the requested measures) on a
1- or 2-axis grid, in deterministic row-major order, and writes a flat CSV.
Grid points are independent, so execution may be parallel; results are
gathered by index so the output bytes never depend on scheduling.
"""

from __future__ import annotations

import concurrent.futures
import json
import math
import os
import time
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .core import (DirectDrive, PhysicalDrive, SystemParams,
                   build_linearized_system, check_stability, solve_steady_state)
from .darkmode import bright_dark_couplings, hybrid_couplings
from .entanglement import pairwise_log_negativities, residual_contangle
from .errors import (ConfigError, DegenerateCouplings, InvalidParams,
                     MoloptError, NonConvergence, UnstableSystem)
from .lyapunov import solve_lyapunov

HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23      # J / K

OUTPUT_NAMES = ("E_aB1", "E_aB2", "E_B1B2", "R_min", "stability",
                "G_minus", "Gt_plus", "Gt_minus", "symplectic_min")

STATUS_OK = "ok"
STATUS_UNSTABLE = "unstable"
STATUS_NONCONVERGED = "nonconverged"
STATUS_ERROR = "error"

CSV_SCHEMA = "molopt-sweep-v1"


def temperature_to_nth(T_kelvin: float, omega_rad_s: float) -> float:
    """Thermal occupancy of a mode at omega (rad/s) per the Bose factor."""
    if T_kelvin < 0 or omega_rad_s <= 0:
        raise InvalidParams("need T >= 0 and omega > 0")
    if T_kelvin == 0.0:
        return 0.0
    x = HBAR * omega_rad_s / (K_B * T_kelvin)
    if x > 700.0:  # occupancy underflows to zero
        return 0.0
    return 1.0 / math.expm1(x)


def nth_to_temperature(n_th: float, omega_rad_s: float) -> float:
    """Inverse of :func:`temperature_to_nth`."""
    if n_th < 0 or omega_rad_s <= 0:
        raise InvalidParams("need n_th >= 0 and omega > 0")
    if n_th == 0.0:
        return 0.0
    return HBAR * omega_rad_s / (K_B * math.log1p(1.0 / n_th))


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: a named field sampled on a linear or log grid."""

    name: str
    min: float
    max: float
    count: int
    scale: str = "linear"

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepSpec:
    base: SystemParams
    axes: tuple[SweepAxis, ...]
    outputs: tuple[str, ...]
    output_path: str | None = None
    parallelism: int = 1
    metadata: dict = field(default_factory=dict)

    def replace(self, **kwargs) -> "SweepSpec":
        return replace(self, **kwargs)


@dataclass(frozen=True)
class PointResult:
    coords: tuple[float, ...]
    values: dict
    status: str


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[PointResult, ...]
    run_info: dict

    @property
    def all_ok(self) -> bool:
        return all(r.status == STATUS_OK for r in self.rows)

    def column(self, name: str) -> np.ndarray:
        """Requested quantity over the grid, NaN where unavailable."""
        return np.array([r.values.get(name, math.nan) for r in self.rows])

    def grid(self, name: str) -> np.ndarray:
        """Quantity reshaped to the axes grid (2-axis sweeps)."""
        shape = tuple(ax.count for ax in self.spec.axes)
        return self.column(name).reshape(shape)

    def to_csv(self) -> str:
        return render_csv(self.spec, self.rows)

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_csv())


# Virtual axis names expand to one or more concrete parameter updates.
def _axis_updates(name: str, value: float) -> dict:
    if name == "G_j":
        return {"G_1": float(value), "G_2": float(value)}
    if name == "gamma_m":
        return {"gamma_1": float(value), "gamma_2": float(value)}
    if name == "T_kelvin":
        return {"_temperature": float(value)}
    if name == "N_half":
        n = int(round(value))
        return {"N_total": n, "M_split": n // 2}
    if name in ("N_total", "M_split"):
        return {name: int(round(value))}
    if name in ("delta_a", "kappa", "gamma_1", "gamma_2", "g_m", "J_m", "theta",
                "n_th", "omega_1", "omega_2", "G_1", "G_2", "delta_tilde",
                "E_amplitude"):
        return {name: float(value)}
    raise ConfigError(f"unknown sweep parameter {name!r}")


def _apply_axes(base: SystemParams, axes, coords) -> SystemParams:
    updates: dict = {}
    for ax, val in zip(axes, coords):
        updates.update(_axis_updates(ax.name, val))
    temp = updates.pop("_temperature", None)
    if temp is not None:
        updates["n_th"] = temperature_to_nth(temp, base.omega_m)
    return base.with_updates(**updates)


def validate_spec(spec: SweepSpec) -> None:
    if not 1 <= len(spec.axes) <= 2:
        raise ConfigError("a sweep takes 1 or 2 axes")
    for ax in spec.axes:
        if ax.count < 2:
            raise ConfigError(f"axis {ax.name!r}: count must be >= 2")
        if not ax.min < ax.max:
            raise ConfigError(f"axis {ax.name!r}: min must be < max")
        if ax.scale not in ("linear", "log"):
            raise ConfigError(f"axis {ax.name!r}: scale must be linear or log")
        if ax.scale == "log" and ax.min <= 0:
            raise ConfigError(f"axis {ax.name!r}: log scale needs min > 0")
        _axis_updates(ax.name, ax.min)  # name resolution check
    if not spec.outputs:
        raise ConfigError("no output quantities requested")
    for out in spec.outputs:
        if out not in OUTPUT_NAMES:
            raise ConfigError(f"unknown output {out!r}; choose from {OUTPUT_NAMES}")
    if spec.parallelism < 1:
        raise ConfigError("parallelism must be >= 1")


def _point_couplings(params: SystemParams, mf) -> tuple[float, float]:
    if isinstance(params.drive, DirectDrive):
        return params.drive.G_1, params.drive.G_2
    return abs(params.g_1 * mf.alpha), abs(params.g_2 * mf.alpha)


def evaluate_point(params: SystemParams, outputs) -> PointResult:
    """Run the pipeline at one grid point; failures become the row status."""
    values = {name: math.nan for name in outputs}
    try:
        mf = solve_steady_state(params)
    except NonConvergence:
        return PointResult((), values, STATUS_NONCONVERGED)
    except MoloptError:
        return PointResult((), values, STATUS_ERROR)

    status = STATUS_OK
    try:
        g1, g2 = _point_couplings(params, mf)
        if "G_minus" in outputs:
            try:
                values["G_minus"] = bright_dark_couplings(
                    g1, g2, params.omega_1, params.omega_2)[1]
            except DegenerateCouplings:
                values["G_minus"] = 0.0  # limit of G1 G2 (w1-w2)/G as G -> 0
        if "Gt_plus" in outputs or "Gt_minus" in outputs:
            hyb = hybrid_couplings(params, g1, g2)
            values["Gt_plus"] = abs(hyb.Gt_plus)
            values["Gt_minus"] = abs(hyb.Gt_minus)

        needs_cm = any(name in outputs for name in
                       ("E_aB1", "E_aB2", "E_B1B2", "R_min", "symplectic_min"))
        needs_linear = needs_cm or "stability" in outputs
        if not needs_linear:
            return PointResult((), values, STATUS_OK)
        sys = build_linearized_system(params, mf)
        verdict = check_stability(sys)
        if "stability" in outputs:
            values["stability"] = verdict.abscissa
        if not verdict.stable and needs_cm:
            return PointResult((), values, STATUS_UNSTABLE)
        if needs_cm:
            cm = solve_lyapunov(sys)
            if "symplectic_min" in outputs:
                values["symplectic_min"] = cm.min_symplectic()
            if "R_min" in outputs:
                report = residual_contangle(cm)
                values["R_min"] = report.R_min
                values["E_aB1"], values["E_aB2"] = report.E_aB1, report.E_aB2
                values["E_B1B2"] = report.E_B1B2
            elif any(k in outputs for k in ("E_aB1", "E_aB2", "E_B1B2")):
                pairs = pairwise_log_negativities(cm)
                values["E_aB1"] = pairs[("a", "B1")]
                values["E_aB2"] = pairs[("a", "B2")]
                values["E_B1B2"] = pairs[("B1", "B2")]
    except UnstableSystem:
        status = STATUS_UNSTABLE
    except MoloptError:
        status = STATUS_ERROR
    values = {k: v for k, v in values.items() if k in outputs}
    return PointResult((), values, status)


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the grid and return all rows in row-major axis order."""
    validate_spec(spec)
    t0 = time.time()
    axis_values = [ax.values() for ax in spec.axes]
    coords_list = [tuple(float(v) for v in combo)
                   for combo in _row_major(axis_values)]

    def job(coords):
        params = _apply_axes(spec.base, spec.axes, coords)
        point = evaluate_point(params, spec.outputs)
        return PointResult(coords, point.values, point.status)

    if spec.parallelism > 1:
        with concurrent.futures.ThreadPoolExecutor(spec.parallelism) as pool:
            rows = tuple(pool.map(job, coords_list))
    else:
        rows = tuple(job(c) for c in coords_list)

    run_info = {"wall_time_s": time.time() - t0,
                "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
                "points": len(rows),
                "flagged": sum(r.status != STATUS_OK for r in rows)}
    result = SweepResult(spec=spec, rows=rows, run_info=run_info)
    if spec.output_path:
        result.write_csv(resolve_output_path(spec.output_path))
    return result


def _row_major(axis_values):
    if len(axis_values) == 1:
        for v in axis_values[0]:
            yield (v,)
    else:
        for v1 in axis_values[0]:
            for v2 in axis_values[1]:
                yield (v1, v2)


def resolve_output_path(path: str) -> str:
    """Apply the output-directory environment override, if set."""
    out_dir = os.environ.get("MOLOPT_OUT_DIR")
    if out_dir:
        return os.path.join(out_dir, os.path.basename(path))
    return path


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _base_meta(base: SystemParams) -> str:
    fields = {"delta_a": base.delta_a, "kappa": base.kappa,
              "gamma_1": base.gamma_1, "gamma_2": base.gamma_2,
              "g_m": base.g_m, "J_m": base.J_m, "theta": base.theta,
              "N_total": base.N_total, "M_split": base.M_split,
              "n_th": base.n_th, "omega_1": base.omega_1,
              "omega_2": base.omega_2, "omega_m": base.omega_m}
    if isinstance(base.drive, DirectDrive):
        fields["drive"] = {"mode": "direct", "G_1": base.drive.G_1,
                           "G_2": base.drive.G_2,
                           "delta_tilde": base.drive.delta_tilde}
    else:
        fields["drive"] = {"mode": "physical",
                           "E_amplitude": base.drive.E_amplitude}
    return json.dumps(fields, sort_keys=True, separators=(",", ":"))


def render_csv(spec: SweepSpec, rows) -> str:
    """Deterministic CSV: meta comment lines, header, one row per grid point.

    Only reproducible metadata goes into the file; timestamps and wall time
    stay on the in-memory result so identical specs give identical bytes.
    """
    lines = [f"# meta: schema={CSV_SCHEMA}",
             f"# meta: version={__version__}"]
    for key in sorted(spec.metadata):
        lines.append(f"# meta: {key}={spec.metadata[key]}")
    lines.append(f"# meta: base={_base_meta(spec.base)}")
    for ax in spec.axes:
        lines.append(f"# meta: axis={ax.name}:{_fmt(ax.min)}:{_fmt(ax.max)}"
                     f":{ax.count}:{ax.scale}")
    header = [ax.name for ax in spec.axes] + list(spec.outputs) + ["status"]
    lines.append(",".join(header))
    for row in rows:
        cells = [_fmt(c) for c in row.coords]
        cells += [_fmt(row.values.get(name, math.nan)) for name in spec.outputs]
        cells.append(row.status)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
