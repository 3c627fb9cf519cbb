"""Command-line interface: run sweeps, list presets, self-check.

Exit codes: 0 full success, 2 if any grid point was flagged, 1 on
configuration or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

import numpy as np

from .core import DirectDrive, PhysicalDrive, SystemParams
from .errors import ConfigError, MoloptError
from .presets import figure_preset, preset_descriptions
from .sweep import (SweepAxis, SweepSpec, resolve_output_path, run_sweep,
                    validate_spec)

_BASE_FIELDS = ("delta_a", "kappa", "gamma_1", "gamma_2", "g_m", "J_m",
                "theta", "N_total", "M_split", "n_th", "omega_1", "omega_2",
                "omega_m")


def _drive_from_table(table: dict):
    mode = table.get("mode")
    if mode == "direct":
        return DirectDrive(G_1=float(table["G_1"]), G_2=float(table["G_2"]),
                           delta_tilde=float(table["delta_tilde"]))
    if mode == "physical":
        return PhysicalDrive(E_amplitude=float(table["E_amplitude"]))
    raise ConfigError(f"drive.mode must be 'direct' or 'physical', got {mode!r}")


def _axes_from_config(entries) -> tuple[SweepAxis, ...]:
    axes = []
    for entry in entries:
        try:
            axes.append(SweepAxis(name=entry["name"], min=float(entry["min"]),
                                  max=float(entry["max"]), count=int(entry["count"]),
                                  scale=entry.get("scale", "linear")))
        except KeyError as exc:
            raise ConfigError(f"axis entry missing key {exc}") from exc
    return tuple(axes)


def load_config(path: str, preset: SweepSpec | None = None) -> SweepSpec:
    """Build a sweep spec from a TOML file, optionally over a preset.

    File keys mirror the spec fields: [base] (with [base.drive]), [[axes]],
    outputs, output_path, parallelism.  Keys present in the file override the
    preset; absent keys keep preset values.
    """
    try:
        with open(path, "rb") as fh:
            cfg = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc

    base = preset.base if preset else SystemParams()
    if "base" in cfg:
        table = dict(cfg["base"])
        drive_table = table.pop("drive", None)
        unknown = set(table) - set(_BASE_FIELDS)
        if unknown:
            raise ConfigError(f"unknown base parameters: {sorted(unknown)}")
        if drive_table is not None:
            base = base.with_updates(drive=_drive_from_table(drive_table))
        if table:
            base = base.with_updates(**table)

    axes = _axes_from_config(cfg["axes"]) if "axes" in cfg else \
        (preset.axes if preset else ())
    outputs = tuple(cfg.get("outputs", preset.outputs if preset else ()))
    output_path = cfg.get("output_path", preset.output_path if preset else None)
    parallelism = int(cfg.get("parallelism", preset.parallelism if preset else 1))
    metadata = dict(preset.metadata) if preset else {}
    metadata.update(cfg.get("metadata", {}))
    return SweepSpec(base=base, axes=axes, outputs=outputs,
                     output_path=output_path, parallelism=parallelism,
                     metadata=metadata)


def _cmd_sweep(args) -> int:
    preset = figure_preset(args.preset) if args.preset else None
    if args.config:
        spec = load_config(args.config, preset=preset)
    elif preset is not None:
        spec = preset
    else:
        raise ConfigError("provide --config and/or --preset")
    if args.out:
        spec = spec.replace(output_path=args.out)
    if args.threads:
        spec = spec.replace(parallelism=args.threads)
    if args.format != "csv":
        raise ConfigError(f"unsupported format {args.format!r}")
    if not spec.output_path:
        raise ConfigError("no output path; pass --out or set output_path")
    validate_spec(spec)

    result = run_sweep(spec)
    path = resolve_output_path(spec.output_path)
    flagged = result.run_info["flagged"]
    print(f"wrote {path}: {result.run_info['points']} points, "
          f"{flagged} flagged, {result.run_info['wall_time_s']:.2f} s")
    return 2 if flagged else 0


def _cmd_presets(args) -> int:
    if args.action != "list":
        raise ConfigError(f"unknown presets action {args.action!r}")
    for name, desc in preset_descriptions().items():
        print(f"{name:8s} {desc}")
    return 0


def _cmd_check(_args) -> int:
    """Invariant self-test on random parameters; prints one line per check."""
    from .selfcheck import run_self_checks
    ok = run_self_checks(np.random.default_rng(20240901), verbose=True)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="molopt",
        description="Steady-state Gaussian sweeps for the two-mode "
                    "molecular optomechanical model")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep to CSV")
    p_sweep.add_argument("--config", help="TOML sweep configuration file")
    p_sweep.add_argument("--preset", help="figure preset name (see 'presets list')")
    p_sweep.add_argument("--out", help="output CSV path (overrides config)")
    p_sweep.add_argument("--threads", type=int, default=None,
                         help="parallel grid evaluation threads")
    p_sweep.add_argument("--format", default="csv", help="output format (csv)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_presets = sub.add_parser("presets", help="inspect figure presets")
    p_presets.add_argument("action", choices=["list"])
    p_presets.set_defaults(func=_cmd_presets)

    p_check = sub.add_parser("check", help="run the invariant self-test suite")
    p_check.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MoloptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
