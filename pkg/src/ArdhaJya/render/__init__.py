"""Text renderers: CSV and markdown. Callers receive strings; nothing here touches files."""

from ..core.table import SineTable
from .csv_export import (
    SINE_TABLE_COLUMNS,
    oscillator_csv,
    parse_table_csv,
    scene_points_csv,
    sweep_csv,
    table_csv,
)
from .markdown import table_markdown

TABLE_FORMATS = ("csv", "markdown")


def export_table(table: SineTable, format: str = "csv", *, wide: bool = False) -> str:
    """Render a SineTable as ``csv`` or ``markdown``."""
    if format == "csv":
        return table_csv(table)
    if format == "markdown":
        return table_markdown(table, wide=wide)
    raise ValueError(f"unknown table format {format!r}; use one of {', '.join(TABLE_FORMATS)}")


__all__ = [
    "SINE_TABLE_COLUMNS",
    "TABLE_FORMATS",
    "export_table",
    "table_csv",
    "table_markdown",
    "parse_table_csv",
    "oscillator_csv",
    "sweep_csv",
    "scene_points_csv",
]
