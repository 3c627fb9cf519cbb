"""Display-only rendering of sweep CSV output."""

__version__ = "0.1.0"

from .presets import PRESET_NAMES, plot_preset
from .reader import (AxisInfo, EmptyData, SchemaMismatch, SweepTable,
                     mask_flagged, read_sweep_csv)
from .render import KINDS, PlotRecipe, render

__all__ = ["AxisInfo", "EmptyData", "KINDS", "PRESET_NAMES", "PlotRecipe",
           "SchemaMismatch", "SweepTable", "mask_flagged", "plot_preset",
           "read_sweep_csv", "render"]
