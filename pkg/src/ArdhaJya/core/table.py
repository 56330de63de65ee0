"""Sine tables by Aryabhata's second-difference recursion."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Union

from .angles import RSINE_RADIUS, Angle, RsineValue, to_rsine
from .errors import InvalidConfigError, ModeMismatchError
from .grid import QUARTER_TURN, AngleGrid, HalfAngleConfig, RecursionConfig, RecursionMode
from .identities import reference_cos, reference_sin
from .recurrence import march_n

logger = logging.getLogger(__name__)

TableConfig = Union[RecursionConfig, HalfAngleConfig]


@dataclass(frozen=True)
class SineTableEntry:
    index: int
    angle: Angle
    computed_sine: float
    rsine: RsineValue
    reference_sine: float
    abs_error: float
    error_minutes: float

    @classmethod
    def build(cls, index: int, angle: Angle, computed_sine: float) -> SineTableEntry:
        reference = reference_sin(angle)
        abs_error = abs(computed_sine - reference)
        return cls(
            index=index,
            angle=angle,
            computed_sine=computed_sine,
            rsine=to_rsine(computed_sine),
            reference_sine=reference,
            abs_error=abs_error,
            error_minutes=abs_error * RSINE_RADIUS,
        )

    @property
    def reference_rsine(self) -> RsineValue:
        return to_rsine(self.reference_sine)


@dataclass(frozen=True)
class DifferenceSeries:
    """First differences δs_1..δs_N and second differences δ²s_2..δ²s_N.

    ``second[i]`` belongs to node ``i + 2``.
    """

    first: tuple[float, ...]
    second: tuple[float, ...]

    @classmethod
    def from_first(cls, first: Sequence[float]) -> DifferenceSeries:
        firsts = tuple(first)
        seconds = tuple(b - a for a, b in zip(firsts, firsts[1:]))
        return cls(first=firsts, second=seconds)

    @classmethod
    def from_sines(cls, sines: Sequence[float]) -> DifferenceSeries:
        """Differences of a sine column, taking s_0 = sin 0 = 0."""
        previous = [0.0, *sines[:-1]]
        return cls.from_first([s - p for s, p in zip(sines, previous)])

    def __len__(self) -> int:
        return len(self.first)

    def partial_sums(self) -> list[float]:
        sums: list[float] = []
        total = 0.0
        for d in self.first:
            total += d
            sums.append(total)
        return sums


@dataclass(frozen=True)
class SineTable:
    config: TableConfig
    entries: tuple[SineTableEntry, ...]
    warnings: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for expected, entry in enumerate(self.entries, start=1):
            if entry.index != expected:
                raise InvalidConfigError(
                    f"table indices must run 1..N without gaps; position {expected} holds index {entry.index}"
                )

    @property
    def grid(self) -> AngleGrid:
        return self.config.grid

    @property
    def mode(self) -> str:
        mode = self.config.mode
        return mode.value if isinstance(mode, RecursionMode) else mode

    @property
    def is_historical(self) -> bool:
        return self.mode == RecursionMode.HISTORICAL.value

    @property
    def sines(self) -> tuple[float, ...]:
        return tuple(e.computed_sine for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> SineTableEntry:
        """Entry for node ``index`` (1-based, as in s_n)."""
        if not 1 <= index <= len(self.entries):
            raise IndexError(f"table has nodes 1..{len(self.entries)}, asked for {index}")
        return self.entries[index - 1]

    def sine(self, n: int) -> float:
        return 0.0 if n == 0 else self[n].computed_sine

    def cosine(self, n: int) -> float:
        """cos(nε) read from the table: by complement when 90° is a node, else Pythagoras."""
        if n == 0:
            return 1.0
        quarter = QUARTER_TURN / self.grid.epsilon.radians
        m = round(quarter)
        if math.isclose(quarter, m, rel_tol=1e-12) and 0 <= m - n <= len(self.entries):
            return self.sine(m - n)
        s = self.sine(n)
        return math.sqrt(max(0.0, 1.0 - s * s))

    def versines(self) -> tuple[float, ...]:
        """Saar, 1 − cos(nε), for every node."""
        return tuple(1.0 - self.cosine(n) for n in range(1, len(self.entries) + 1))

    def perturbed(self, index: int, delta: float) -> SineTable:
        """Copy with s_index shifted by ``delta``; used to exercise the checks."""
        entry = self[index]
        bumped = SineTableEntry.build(entry.index, entry.angle, entry.computed_sine + delta)
        entries = list(self.entries)
        entries[index - 1] = bumped
        return replace(self, entries=tuple(entries))


def build_entries(grid: AngleGrid, sines: Sequence[float]) -> tuple[SineTableEntry, ...]:
    return tuple(SineTableEntry.build(n, grid.node(n), s) for n, s in enumerate(sines, start=1))


def quadrant_warnings(grid: AngleGrid) -> tuple[str, ...]:
    if not grid.extends_past_quadrant:
        return ()
    message = (
        f"grid runs to {grid.span.degrees:.2f} degrees, past 90; "
        "the classical table stops at the quadrant"
    )
    logger.warning(message)
    return (message,)


def generate_recursion_table(config: RecursionConfig) -> tuple[SineTable, DifferenceSeries]:
    """Build s_1..s_N from δs_n = δs_{n−1} − K·s_{n−1}, s_n = s_{n−1} + δs_n.

    >>> table, _ = generate_recursion_table(RecursionConfig.preset("aryabhata"))
    >>> table[8].rsine.rounded
    1719
    """
    grid = config.grid
    if grid.count < 1:
        raise InvalidConfigError(f"grid needs at least one node, got count={grid.count}")
    if grid.epsilon.radians <= 0.0:
        raise InvalidConfigError(f"grid step must be positive, got {grid.epsilon.radians!r}")
    seed = config.seed_first_difference
    assert seed is not None
    coefficient = config.coefficient
    logger.debug(
        "recursion mode=%s step=%r K=%r N=%d",
        config.mode.value, config.working_step, coefficient, grid.count,
    )
    deltas, sines = march_n(seed, seed, coefficient, grid.count)
    table = SineTable(config=config, entries=build_entries(grid, sines), warnings=quadrant_warnings(grid))
    return table, DifferenceSeries.from_first(deltas)


def _require_exact(table: SineTable, check: str) -> None:
    if table.is_historical:
        raise ModeMismatchError(
            f"{check} is only meaningful for exact tables; this table was generated in historical mode"
        )


def first_difference_check(table: SineTable) -> float:
    """max_n |(s_n − s_{n−1}) − 2·sin(ε/2)·cos((n−½)ε)|."""
    _require_exact(table, "first_difference_check")
    eps = table.grid.epsilon.radians
    half_chord = 2.0 * math.sin(eps / 2.0)
    worst = 0.0
    for n in range(1, len(table) + 1):
        lhs = table.sine(n) - table.sine(n - 1)
        rhs = half_chord * reference_cos((n - 0.5) * eps)
        worst = max(worst, abs(lhs - rhs))
    return worst


def second_difference_check(series: DifferenceSeries, table: SineTable) -> float:
    """max_{n≥2} |δ²s_n + 4·sin²(ε/2)·s_{n−1}|; 0 for a single-node series."""
    _require_exact(table, "second_difference_check")
    eps = table.grid.epsilon.radians
    k = 4.0 * math.sin(eps / 2.0) ** 2
    worst = 0.0
    for i, second in enumerate(series.second):
        n = i + 2
        worst = max(worst, abs(second + k * table.sine(n - 1)))
    return worst


def cosine_first_difference_check(table: SineTable) -> float:
    """max_n |(c_n − c_{n−1}) + 2·sin(ε/2)·sin((n−½)ε)|, cosines read from the table."""
    _require_exact(table, "cosine_first_difference_check")
    eps = table.grid.epsilon.radians
    half_chord = 2.0 * math.sin(eps / 2.0)
    worst = 0.0
    for n in range(1, len(table) + 1):
        lhs = table.cosine(n) - table.cosine(n - 1)
        rhs = -half_chord * reference_sin((n - 0.5) * eps)
        worst = max(worst, abs(lhs - rhs))
    return worst


def telescoping_residual(series: DifferenceSeries, table: SineTable) -> float:
    """max_n |Σ_{m≤n} δs_m − s_n|."""
    return max(
        (abs(total - s) for total, s in zip(series.partial_sums(), table.sines)),
        default=0.0,
    )
