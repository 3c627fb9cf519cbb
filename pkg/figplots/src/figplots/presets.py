"""Default recipes for the named figure CSVs."""

from __future__ import annotations

from .reader import SchemaMismatch
from .render import PlotRecipe

# kind, value column, axis labels per figure family.
_PRESET_STYLE = {
    "fig2b": ("polar", None, None, None),
    "fig3a": ("heatmap", "E_aB2", "detuning / vibration freq", "coupling G_j"),
    "fig3b": ("heatmap", "E_aB2", "coupling G_j", "hopping J_m"),
    "fig4a": ("heatmap", "E_B1B2", "detuning / vibration freq", "coupling G_j"),
    "fig4b": ("heatmap", "E_B1B2", "detuning / vibration freq", "coupling G_j"),
    "fig4c": ("heatmap", "E_B1B2", "coupling G_j", "hopping J_m"),
    "fig4d": ("line-family", "E_B1B2", "coupling G_j", None),
    "fig5a": ("heatmap", "E_B1B2", "sub-ensemble size M", "cavity decay"),
    "fig5b": ("heatmap", "E_B1B2", "molecule number N", "cavity decay"),
    "fig5c": ("heatmap", "E_B1B2", "sub-ensemble size M", "cavity decay"),
    "fig5d": ("heatmap", "E_B1B2", "molecule number N", "cavity decay"),
    "fig6a": ("heatmap", "E_aB2", "detuning / vibration freq", "temperature (K)"),
    "fig6b": ("heatmap", "E_B1B2", "detuning / vibration freq", "temperature (K)"),
    "fig6c": ("line-family", "E_aB2", "temperature (K)", None),
    "fig6d": ("line-family", "E_B1B2", "temperature (K)", None),
    "fig7a": ("heatmap", "R_min", "coupling G_j", "hopping J_m"),
    "fig7b": ("heatmap", "R_min", "coupling G_j", "hopping J_m"),
    "fig8a": ("heatmap", "R_min", "decay gamma_1", "decay gamma_2"),
    "fig8b": ("line-family", "R_min", "decay gamma_m", None),
    "fig9a": ("heatmap", "R_min", "coupling G_1", "coupling G_2"),
    "fig9b": ("line-family", "R_min", "coupling G_j", None),
    "fig10a": ("line-family", "R_min", "thermal occupancy n_th", None),
    "fig10b": ("line-family", "R_min", "thermal occupancy n_th", None),
}

PRESET_NAMES = tuple(sorted(_PRESET_STYLE))


def plot_preset(name: str, csv_path: str | None = None,
                output_path: str | None = None) -> PlotRecipe:
    try:
        kind, value, x_label, y_label = _PRESET_STYLE[name]
    except KeyError:
        raise SchemaMismatch(
            f"unknown plot preset {name!r}; available: "
            f"{', '.join(PRESET_NAMES)}") from None
    return PlotRecipe(csv_path=csv_path or f"{name}.csv", kind=kind,
                      output_path=output_path or f"{name}.png",
                      value=value, x_label=x_label, y_label=y_label,
                      title=name)
