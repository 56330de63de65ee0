"""The second-difference march shared by sine tables and the oscillator.

    δ_n = δ_{n−1} − K·y_{n−1},   y_n = y_{n−1} + δ_n

The running sum Σ δ_m is carried as y itself, so the cost is O(N).
"""

from __future__ import annotations

from collections.abc import Iterator


def march(y1: float, first_difference: float, coefficient: float) -> Iterator[tuple[float, float]]:
    """Yield (δ_n, y_n) for n = 1, 2, ... without end, starting at (δ_1, y_1)."""
    delta = first_difference
    y = y1
    yield delta, y
    while True:
        delta = delta - coefficient * y
        y = y + delta
        yield delta, y


def march_n(
    y1: float, first_difference: float, coefficient: float, count: int
) -> tuple[list[float], list[float]]:
    """First ``count`` differences and values of :func:`march`."""
    deltas: list[float] = []
    values: list[float] = []
    if count <= 0:
        return deltas, values
    for delta, y in march(y1, first_difference, coefficient):
        deltas.append(delta)
        values.append(y)
        if len(values) == count:
            break
    return deltas, values
