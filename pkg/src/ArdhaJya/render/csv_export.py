"""CSV emitters: header row, comma delimiter, '\\n' line endings."""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Iterable, Sequence
from typing import Any

from ..core.finite_diff import OscillatorRun, oscillator_reference
from ..core.geometry import GeometryScene, SweepSummary
from ..core.table import SineTable

SINE_TABLE_COLUMNS = (
    "index",
    "angle_deg",
    "computed_sine",
    "rsine_minutes",
    "reference_sine",
    "error_minutes",
)


def _write(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def table_csv(table: SineTable) -> str:
    """One row per node; degrees to 2 places and sines to 4, as the old tables print them."""
    return _write(
        SINE_TABLE_COLUMNS,
        (
            (
                e.index,
                f"{e.angle.degrees:.2f}",
                f"{e.computed_sine:.4f}",
                e.rsine.rounded,
                f"{e.reference_sine:.4f}",
                f"{e.error_minutes:.3f}",
            )
            for e in table.entries
        ),
    )


def parse_table_csv(text: str) -> list[dict[str, float]]:
    """Read back :func:`table_csv` output as numbers (index and minutes as ints)."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != SINE_TABLE_COLUMNS:
        raise ValueError(f"expected columns {', '.join(SINE_TABLE_COLUMNS)}; got {reader.fieldnames}")
    rows: list[dict[str, float]] = []
    for raw in reader:
        row: dict[str, float] = {k: float(v) for k, v in raw.items()}
        row["index"] = int(raw["index"])
        row["rsine_minutes"] = int(raw["rsine_minutes"])
        rows.append(row)
    return rows


def oscillator_csv(run: OscillatorRun) -> str:
    return _write(
        ("t", "y", "reference_cos", "reference_sin", "error"),
        ((f"{t:.10g}", f"{y:.15g}", f"{c:.15g}", f"{s:.15g}", f"{err:.6e}") for t, y, c, s, err in oscillator_reference(run)),
    )


def sweep_csv(summary: SweepSummary) -> str:
    return _write(
        ("theta_deg", "phi_deg", "discrepancy", "passed"),
        (
            (f"{math.degrees(p.theta):.6f}", f"{math.degrees(p.phi):.6f}", f"{p.discrepancy:.3e}", int(p.passed))
            for p in summary.points
        ),
    )


def scene_points_csv(scene: GeometryScene) -> str:
    return _write(("point", "x", "y"), ((name, f"{x:.15f}", f"{y:.15f}") for name, x, y in scene.as_rows()))
