"""Observed order of accuracy under step refinement."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np


def error_ratios(errors: Sequence[float]) -> list[float]:
    """e_i / e_{i+1} for consecutive refinements."""
    e = np.abs(np.asarray(errors, dtype=float))
    return (e[:-1] / e[1:]).tolist()


def observed_order(errors: Sequence[float], refinement: float = 2.0) -> list[float]:
    """log(e_i/e_{i+1}) / log(refinement) for each consecutive pair."""
    return (np.log(error_ratios(errors)) / np.log(refinement)).tolist()


def fitted_order(steps: Sequence[float], errors: Sequence[float]) -> float:
    """Slope of log|error| against log(step), least squares."""
    slope, _ = np.polyfit(np.log(np.asarray(steps, dtype=float)), np.log(np.abs(errors)), 1)
    return float(slope)


@dataclass(frozen=True)
class ConvergenceStudy:
    steps: tuple[float, ...]
    errors: tuple[float, ...]

    @property
    def ratios(self) -> list[float]:
        return error_ratios(self.errors)

    @property
    def orders(self) -> list[float]:
        return observed_order(self.errors, self.steps[0] / self.steps[1] if len(self.steps) > 1 else 2.0)

    @property
    def fitted_order(self) -> float:
        return fitted_order(self.steps, self.errors)

    def within(self, low: float, high: float) -> bool:
        """All consecutive error ratios lie in [low, high]."""
        return all(low <= r <= high for r in self.ratios)

    def to_text(self) -> str:
        lines = ["step            error          ratio"]
        ratios = [float("nan"), *self.ratios]
        for h, e, r in zip(self.steps, self.errors, ratios):
            lines.append(f"{h:<15.6e} {e:<14.6e} {r:.4f}")
        return "\n".join(lines)


def convergence_study(
    error_at: Callable[[float], float], coarsest: float, levels: int = 5, refinement: float = 2.0
) -> ConvergenceStudy:
    """Evaluate ``error_at`` on steps coarsest, coarsest/r, coarsest/r², ..."""
    steps = tuple(coarsest / refinement**i for i in range(levels))
    errors = tuple(abs(error_at(h)) for h in steps)
    return ConvergenceStudy(steps=steps, errors=errors)
