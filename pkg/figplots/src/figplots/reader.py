"""Parser for the sweep CSV contract.

The file format is: `# meta: key=value` comment lines, a header row naming
axis columns, output columns and a trailing `status`, then one row per grid
point with floats at full precision.  Axis metadata lines
(`axis=<name>:<min>:<max>:<count>:<scale>`) carry the grid geometry, which is
what lets a flat file reshape back into a plot grid without recomputing
anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SCHEMA = "molopt-sweep-v1"


class SchemaMismatch(Exception):
    """The file does not follow the documented sweep CSV contract."""


class EmptyData(Exception):
    """The file parses but holds no plottable rows."""


@dataclass(frozen=True)
class AxisInfo:
    name: str
    min: float
    max: float
    count: int
    scale: str

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepTable:
    meta: dict
    axes: tuple[AxisInfo, ...]
    columns: tuple[str, ...]
    outputs: tuple[str, ...]
    data: np.ndarray          # floats, shape (rows, len(columns) - 1)
    status: np.ndarray        # strings, shape (rows,)

    def column(self, name: str) -> np.ndarray:
        try:
            idx = self.columns.index(name)
        except ValueError:
            raise SchemaMismatch(f"no column {name!r}; have {self.columns}") from None
        return self.data[:, idx]

    def ok_mask(self) -> np.ndarray:
        return self.status == "ok"

    def grid(self, name: str) -> np.ndarray:
        """Column reshaped to (axis1, axis2); needs two axis meta lines."""
        if len(self.axes) != 2:
            raise SchemaMismatch("grid reshape needs a 2-axis sweep")
        shape = (self.axes[0].count, self.axes[1].count)
        if shape[0] * shape[1] != self.data.shape[0]:
            raise SchemaMismatch(f"row count {self.data.shape[0]} does not "
                                 f"match axis metadata {shape}")
        return self.column(name).reshape(shape)

    def status_grid(self) -> np.ndarray:
        shape = (self.axes[0].count, self.axes[1].count)
        return self.status.reshape(shape)


def _parse_axis_meta(value: str) -> AxisInfo:
    parts = value.split(":")
    if len(parts) != 5:
        raise SchemaMismatch(f"malformed axis metadata {value!r}")
    return AxisInfo(name=parts[0], min=float(parts[1]), max=float(parts[2]),
                    count=int(parts[3]), scale=parts[4])


def read_sweep_csv(path: str) -> SweepTable:
    meta: dict = {}
    axes: list[AxisInfo] = []
    header: list[str] | None = None
    rows: list[list[float]] = []
    status: list[str] = []

    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("# meta: "):
                body = line[len("# meta: "):]
                key, _, value = body.partition("=")
                if key == "axis":
                    axes.append(_parse_axis_meta(value))
                else:
                    meta[key] = value
                continue
            if line.startswith("#"):
                continue
            if header is None:
                header = line.split(",")
                continue
            cells = line.split(",")
            if len(cells) != len(header):
                raise SchemaMismatch(f"row width {len(cells)} != header "
                                     f"width {len(header)}")
            status.append(cells[-1])
            rows.append([_parse_float(c) for c in cells[:-1]])

    if meta.get("schema") != SCHEMA:
        raise SchemaMismatch(f"expected schema {SCHEMA!r}, found "
                             f"{meta.get('schema')!r}")
    if header is None or header[-1] != "status":
        raise SchemaMismatch("missing header row ending in 'status'")
    if not rows:
        raise EmptyData(f"{path} holds no data rows")

    axis_names = tuple(a.name for a in axes)
    if tuple(header[:len(axes)]) != axis_names:
        raise SchemaMismatch(f"axis columns {header[:len(axes)]} do not match "
                             f"axis metadata {axis_names}")
    outputs = tuple(header[len(axes):-1])
    return SweepTable(meta=meta, axes=tuple(axes), columns=tuple(header[:-1]),
                      outputs=outputs, data=np.array(rows, dtype=float),
                      status=np.array(status))


def _parse_float(cell: str) -> float:
    try:
        return float(cell)
    except ValueError:
        raise SchemaMismatch(f"non-numeric cell {cell!r}") from None


def mask_flagged(table: SweepTable, name: str) -> np.ndarray:
    """Column as a masked array; any non-ok row is masked, never drawn."""
    values = table.column(name)
    return np.ma.masked_array(values, mask=(~table.ok_mask())
                              | ~np.isfinite(values))
