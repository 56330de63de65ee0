"""Markdown rendering in the four-column layout of the classical table."""

from __future__ import annotations

import math

from ..core.table import SineTable

_LABELS = {
    "historical": "Aryabhata",
    "exact": "recursion",
    "half-angle": "half-angle",
}


def angle_label(table: SineTable, n: int) -> str:
    """``nπ/d`` when the step is a simple fraction of π, else degrees."""
    frac = table.grid.pi_fraction
    if abs(float(frac) * math.pi - table.grid.epsilon.radians) < 1e-12:
        num = n * frac.numerator
        prefix = "" if num == 1 else str(num)
        return f"{prefix}π/{frac.denominator}"
    return f"{table[n].angle.degrees:.2f}°"


def _row(cells: list[str]) -> str:
    return "| " + " | ".join(cells) + " |"


def table_markdown(table: SineTable, *, wide: bool = False) -> str:
    label = _LABELS.get(table.mode, table.mode)
    header = ["θ", f"sin(θ) {label}", "sin(θ) (minutes)", "sin(θ) modern"]
    if wide:
        header += ["degrees", "versine"]
    lines = [_row(header), _row(["---"] * len(header))]
    versines = table.versines() if wide else ()
    for e in table.entries:
        cells = [
            angle_label(table, e.index),
            f"{e.computed_sine:.4f}",
            str(e.rsine.rounded),
            f"{e.reference_sine:.4f}",
        ]
        if wide:
            cells += [f"{e.angle.degrees:.2f}", f"{versines[e.index - 1]:.4f}"]
        lines.append(_row(cells))
    for w in table.warnings:
        lines.append("")
        lines.append(f"> warning: {w}")
    return "\n".join(lines) + "\n"
