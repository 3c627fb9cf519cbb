"""`plot` command: render a recipe file or a named figure preset."""

from __future__ import annotations

import argparse
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .presets import plot_preset
from .reader import EmptyData, SchemaMismatch
from .render import PlotRecipe, render

_RECIPE_KEYS = {"csv_path", "kind", "output_path", "value", "x_label",
                "y_label", "title", "vmin", "vmax"}


def load_recipe(path: str) -> PlotRecipe:
    with open(path, "rb") as fh:
        cfg = tomllib.load(fh)
    unknown = set(cfg) - _RECIPE_KEYS
    if unknown:
        raise SchemaMismatch(f"unknown recipe keys: {sorted(unknown)}")
    missing = {"csv_path", "kind", "output_path"} - set(cfg)
    if missing:
        raise SchemaMismatch(f"recipe missing keys: {sorted(missing)}")
    return PlotRecipe(**cfg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render sweep CSV files as figure-style images")
    parser.add_argument("--recipe", help="TOML recipe file")
    parser.add_argument("--preset", help="figure preset name, e.g. fig4b")
    parser.add_argument("--csv", help="input CSV (preset mode; "
                                      "default <preset>.csv)")
    parser.add_argument("--out", help="output image path (preset mode; "
                                      "default <preset>.png)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.recipe:
            recipe = load_recipe(args.recipe)
        elif args.preset:
            recipe = plot_preset(args.preset, csv_path=args.csv,
                                 output_path=args.out)
        else:
            print("error: provide --recipe or --preset", file=sys.stderr)
            return 1
        render(recipe)
        print(f"wrote {recipe.output_path}")
        return 0
    except (SchemaMismatch, EmptyData, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
