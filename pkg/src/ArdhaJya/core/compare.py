"""Comparison of generated tables against the reference oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .table import SineTable, SineTableEntry

# The classical table on ε = π/48 as printed: sine to four places, then the
# same value in minutes (Rsine, radius 3438).
PUBLISHED_SINES: tuple[float, ...] = (
    0.0654, 0.1305, 0.1951, 0.2588, 0.3214, 0.3827, 0.4423, 0.5000,
    0.5556, 0.6088, 0.6594, 0.7072, 0.7519, 0.7935, 0.8316, 0.8662,
    0.8971, 0.9241, 0.9472, 0.9662, 0.9812, 0.9919, 0.9983, 1.0005,
)
PUBLISHED_RSINE_MINUTES: tuple[int, ...] = (
    225, 449, 671, 890, 1105, 1315, 1520, 1719,
    1910, 2093, 2267, 2431, 2585, 2728, 2859, 2978,
    3084, 3177, 3256, 3322, 3373, 3410, 3432, 3439,
)
PUBLISHED_GRID_FRACTION = Fraction(1, 48)

# Pass thresholds.
HISTORICAL_MINUTE_TOLERANCE = 1
EXACT_SINE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EntryComparison:
    index: int
    angle_degrees: float
    computed_sine: float
    reference_sine: float
    abs_error: float
    error_minutes: float
    rsine_minutes: int
    reference_rsine_minutes: int

    @property
    def rsine_deviation(self) -> int:
        return abs(self.rsine_minutes - self.reference_rsine_minutes)

    @classmethod
    def of(cls, entry: SineTableEntry) -> EntryComparison:
        return cls(
            index=entry.index,
            angle_degrees=entry.angle.degrees,
            computed_sine=entry.computed_sine,
            reference_sine=entry.reference_sine,
            abs_error=entry.abs_error,
            error_minutes=entry.error_minutes,
            rsine_minutes=entry.rsine.rounded,
            reference_rsine_minutes=entry.reference_rsine.rounded,
        )


@dataclass(frozen=True)
class ComparisonReport:
    mode: str
    entries: tuple[EntryComparison, ...]
    max_abs_error: float
    max_error_minutes: float
    rsine_exceedances: int
    published_max_deviation: int | None = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        """Exact tables: |error| ≤ 1e-9. Historical: within 1 minute of the
        published table on its own grid, else of the rounded reference."""
        if not self.entries:
            return True
        if self.mode != "historical":
            return self.max_abs_error <= EXACT_SINE_TOLERANCE
        if self.published_max_deviation is not None:
            return self.published_max_deviation <= HISTORICAL_MINUTE_TOLERANCE
        return self.rsine_exceedances == 0

    @property
    def rule(self) -> str:
        """Which threshold :attr:`ok` applied."""
        if not self.entries:
            return "no nodes to judge"
        if self.mode != "historical":
            return f"|error| <= {EXACT_SINE_TOLERANCE:g} sine units"
        if self.published_max_deviation is not None:
            return f"within {HISTORICAL_MINUTE_TOLERANCE} minute of the published minutes"
        return f"within {HISTORICAL_MINUTE_TOLERANCE} minute of the rounded reference Rsine"

    @property
    def worst(self) -> EntryComparison | None:
        return max(self.entries, key=lambda e: e.abs_error, default=None)

    def to_text(self) -> str:
        lines = [
            f"Comparison ({self.mode}): {'OK' if self.ok else 'FAIL'} (nodes: {len(self.entries)})",
            f"  rule                : {self.rule}",
            f"  max |error|         : {self.max_abs_error:.3e}",
            f"  max |error| minutes : {self.max_error_minutes:.3f}",
            f"  Rsine > 1 min off reference: {self.rsine_exceedances}",
        ]
        if self.published_max_deviation is not None:
            lines.append(f"  max deviation from published minutes: {self.published_max_deviation}")
        worst = self.worst
        if worst is not None:
            lines.append(f"  worst node: {worst.index} ({worst.angle_degrees:.2f} deg)")
        for w in self.warnings:
            lines.append(f"  WARN {w}")
        return "\n".join(lines)


def published_deviations(table: SineTable) -> list[int] | None:
    """|computed minutes − printed minutes| per node, or None off the π/48 grid."""
    if table.grid.pi_fraction != PUBLISHED_GRID_FRACTION or len(table) > len(PUBLISHED_RSINE_MINUTES):
        return None
    return [abs(e.rsine.rounded - p) for e, p in zip(table.entries, PUBLISHED_RSINE_MINUTES)]


def compare_with_reference(table: SineTable) -> ComparisonReport:
    rows = tuple(EntryComparison.of(e) for e in table.entries)
    published = published_deviations(table) if table.is_historical and rows else None
    return ComparisonReport(
        mode=table.mode,
        entries=rows,
        max_abs_error=max((r.abs_error for r in rows), default=0.0),
        max_error_minutes=max((r.error_minutes for r in rows), default=0.0),
        rsine_exceedances=sum(1 for r in rows if r.rsine_deviation > HISTORICAL_MINUTE_TOLERANCE),
        published_max_deviation=max(published) if published else None,
        warnings=table.warnings,
    )
