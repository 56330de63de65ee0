"""Sine tables by halving, the route of cos 2θ = 1 − 2·sin²θ.

Starting from sin 30° = 1/2 and sin 90° = 1, each pass

1. halves every known node with an even index: sin θ = sqrt((1 − cos 2θ)/2),
2. fills complements: sin(90° − θ) = cos θ,
3. takes any cosine not available by complement from cos θ = sqrt(1 − sin²θ).

Passes repeat until nothing new appears. A node still missing at that point
is an error; nothing is interpolated.
"""

from __future__ import annotations

import logging
import math

from .errors import UnsupportedGridError
from .grid import AngleGrid, HalfAngleConfig
from .table import SineTable, build_entries, quadrant_warnings

logger = logging.getLogger(__name__)

# Deepest grid supported (1536 nodes, step ≈ 0.0586°). Past it 1 − cos 2θ loses
# most of its digits to cancellation.
MAX_HALVINGS = 10


def _check_depth(k: int) -> None:
    if k < 1:
        raise UnsupportedGridError(f"need at least one halving, got k={k}")
    if k > MAX_HALVINGS:
        raise UnsupportedGridError(f"half-angle tables support at most k={MAX_HALVINGS} halvings, got k={k}")


def grid_halvings(grid: AngleGrid) -> int:
    """k such that ε = π/(3·2^k), 1 ≤ k ≤ MAX_HALVINGS; raises if there is none."""
    ratio = math.pi / (3.0 * grid.epsilon.radians)
    k = round(math.log2(ratio)) if ratio > 0 else 0
    if k < 1 or not math.isclose(grid.epsilon.radians, math.pi / (3 * 2**k), rel_tol=1e-12):
        raise UnsupportedGridError(
            f"half-angle tables need a step of π/(3·2^k) with k ≥ 1 "
            f"(30°, 15°, 7.5°, 3.75°, ...); got {grid.epsilon.degrees:.6g}°"
        )
    _check_depth(k)
    return k


def half_angle_grid(halvings: int, count: int | None = None) -> AngleGrid:
    """Grid π/(3·2^k) up to 90° (or ``count`` nodes)."""
    _check_depth(halvings)
    quarter = 3 * 2 ** (halvings - 1)
    return AngleGrid.from_divisor(3 * 2**halvings, quarter if count is None else count)


def _fill_quarter(quarter: int, thirty: int) -> dict[int, float]:
    sines: dict[int, float] = {thirty: 0.5, quarter: 1.0}

    def cosine(n: int) -> float:
        if n == quarter:
            return 0.0
        if quarter - n in sines:
            return sines[quarter - n]
        s = sines[n]
        return math.sqrt(max(0.0, 1.0 - s * s))

    passes = 0
    while len(sines) < quarter:
        before = len(sines)
        passes += 1
        for n in sorted(sines, reverse=True):
            if n % 2 == 0 and n // 2 not in sines:
                sines[n // 2] = math.sqrt((1.0 - cosine(n)) / 2.0)
        for n in sorted(sines):
            if n < quarter and quarter - n not in sines:
                sines[quarter - n] = cosine(n)
        logger.debug("half-angle pass %d: %d of %d nodes known", passes, len(sines), quarter)
        if len(sines) == before:
            break
    return sines


def generate_half_angle_table(target_grid: AngleGrid) -> SineTable:
    """Sine table on π/(3·2^k) using only halving, complements and Pythagoras.

    >>> t = generate_half_angle_table(half_angle_grid(4))
    >>> t[8].computed_sine
    0.5
    """
    k = grid_halvings(target_grid)
    quarter = 3 * 2 ** (k - 1)
    if target_grid.count > quarter:
        raise UnsupportedGridError(
            f"half-angle tables stop at 90° ({quarter} nodes on this grid); asked for {target_grid.count}"
        )
    thirty = 2 ** (k - 1)
    sines = _fill_quarter(quarter, thirty)
    missing = [n for n in range(1, quarter + 1) if n not in sines]
    if missing:
        raise UnsupportedGridError(f"halving from the 30° and 90° anchors never reached nodes {missing}")
    column = [sines[n] for n in range(1, target_grid.count + 1)]
    return SineTable(
        config=HalfAngleConfig(grid=target_grid, halvings=k),
        entries=build_entries(target_grid, column),
        warnings=quadrant_warnings(target_grid),
    )
