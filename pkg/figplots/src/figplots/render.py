"""Render sweep tables as heatmaps, line families, or polar coupling plots.

Rendering is display-only: every number shown comes straight from the CSV.
Flagged (unstable / nonconverged / error) grid points are masked and drawn
in a distinct hatch color so gaps are visible rather than silently blank.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .reader import EmptyData, SchemaMismatch, SweepTable, mask_flagged, read_sweep_csv

KINDS = ("heatmap", "line-family", "polar")

MASKED_COLOR = "#b0b0b0"

# Deterministic output: fixed style, hashed SVG ids, no embedded dates.
matplotlib.rcParams["svg.hashsalt"] = "figplots"


@dataclass(frozen=True)
class PlotRecipe:
    csv_path: str
    kind: str
    output_path: str
    value: str | None = None      # column; default: first output column
    x_label: str | None = None
    y_label: str | None = None
    title: str | None = None
    vmin: float | None = None
    vmax: float | None = None
    extra: dict = field(default_factory=dict)


def _value_column(table: SweepTable, recipe: PlotRecipe) -> str:
    if recipe.value:
        if recipe.value not in table.outputs:
            raise SchemaMismatch(f"value column {recipe.value!r} not among "
                                 f"outputs {table.outputs}")
        return recipe.value
    if not table.outputs:
        raise SchemaMismatch("CSV has no output columns")
    return table.outputs[0]


def _render_heatmap(table: SweepTable, recipe: PlotRecipe, fig):
    name = _value_column(table, recipe)
    grid = np.ma.masked_invalid(table.grid(name))
    grid = np.ma.masked_where(table.status_grid() != "ok", grid)
    ax = fig.add_subplot(111)
    x = table.axes[0].values()
    y = table.axes[1].values()
    cmap = plt.get_cmap("viridis").copy()
    cmap.set_bad(MASKED_COLOR)
    mesh = ax.pcolormesh(x, y, grid.T, cmap=cmap, shading="nearest",
                         vmin=recipe.vmin, vmax=recipe.vmax)
    if table.axes[0].scale == "log":
        ax.set_xscale("log")
    if table.axes[1].scale == "log":
        ax.set_yscale("log")
    fig.colorbar(mesh, ax=ax, label=name)
    ax.set_xlabel(recipe.x_label or table.axes[0].name)
    ax.set_ylabel(recipe.y_label or table.axes[1].name)
    return ax


def _render_line_family(table: SweepTable, recipe: PlotRecipe, fig):
    name = _value_column(table, recipe)
    ax = fig.add_subplot(111)
    x_axis = table.axes[0]
    values = mask_flagged(table, name)
    if len(table.axes) == 1:
        ax.plot(table.column(x_axis.name), values, lw=1.4)
    else:
        family = table.axes[1]
        grid = values.reshape(x_axis.count, family.count)
        x = x_axis.values()
        for k, fam_val in enumerate(family.values()):
            ax.plot(x, grid[:, k], lw=1.4,
                    label=f"{family.name} = {fam_val:g}")
        ax.legend(frameon=False)
    if x_axis.scale == "log":
        ax.set_xscale("log")
    ax.set_xlabel(recipe.x_label or x_axis.name)
    ax.set_ylabel(recipe.y_label or name)
    return ax


def _render_polar(table: SweepTable, recipe: PlotRecipe, fig):
    ax = fig.add_subplot(111, projection="polar")
    theta = table.column(table.axes[0].name)
    names = [recipe.value] if recipe.value else list(table.outputs)
    for name in names:
        values = mask_flagged(table, name)
        ax.plot(theta, values, lw=1.4, label=name)
    ax.legend(frameon=False, loc="upper right", bbox_to_anchor=(1.25, 1.1))
    return ax


def render(recipe: PlotRecipe):
    """Draw the recipe and write the image; returns the matplotlib figure."""
    if recipe.kind not in KINDS:
        raise SchemaMismatch(f"unknown plot kind {recipe.kind!r}; "
                             f"choose from {KINDS}")
    table = read_sweep_csv(recipe.csv_path)
    if not np.any(np.isfinite(table.data[:, len(table.axes):])):
        raise EmptyData(f"{recipe.csv_path}: no finite values to plot")

    fig = plt.figure(figsize=(5.4, 4.2), dpi=150)
    try:
        if recipe.kind == "heatmap":
            ax = _render_heatmap(table, recipe, fig)
        elif recipe.kind == "line-family":
            ax = _render_line_family(table, recipe, fig)
        else:
            ax = _render_polar(table, recipe, fig)
        title = recipe.title or table.meta.get("preset", "")
        if title:
            ax.set_title(title)
        fig.tight_layout()
        fig.savefig(recipe.output_path, metadata=_clean_metadata(recipe.output_path))
    finally:
        plt.close(fig)
    return fig


def _clean_metadata(path: str):
    # Strip creation timestamps so identical inputs give identical bytes.
    if path.endswith(".svg"):
        return {"Date": None}
    if path.endswith(".png"):
        return {"Software": "figplots"}
    return None
