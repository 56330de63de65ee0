"""Angular grids and recursion configuration."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from enum import Enum
from fractions import Fraction

from .angles import HISTORICAL_PI, Angle
from .errors import EmptyGridError, InvalidConfigError

QUARTER_TURN = math.pi / 2
# Steps are printed to four places in the historical tables.
HISTORICAL_STEP_DIGITS = 4
HISTORICAL_STEP_FIGURES = 3
# Largest denominator tried when recovering ε as a rational fraction of π.
_MAX_PI_DIVISOR = 100_000


@dataclass(frozen=True)
class AngleGrid:
    """Uniform grid of nodes n·ε for n = 1..count."""

    epsilon: Angle
    count: int

    def __post_init__(self) -> None:
        if not isinstance(self.epsilon, Angle):
            object.__setattr__(self, "epsilon", Angle(float(self.epsilon)))
        if self.epsilon.radians <= 0.0:
            raise InvalidConfigError(f"grid step must be positive, got {self.epsilon.radians!r} rad")
        if self.count < 1:
            raise EmptyGridError(f"grid needs at least one node, got count={self.count}")

    @classmethod
    def from_divisor(cls, divisor: int, count: int) -> AngleGrid:
        """Grid with step π/divisor."""
        if divisor <= 0:
            raise InvalidConfigError(f"divisor must be positive, got {divisor}")
        try:
            step = math.pi / divisor
        except OverflowError:
            raise InvalidConfigError(f"divisor {divisor} is too large for a float step") from None
        return cls(Angle(step), count)

    @classmethod
    def quarter(cls, divisor: int) -> AngleGrid:
        """Grid with step π/divisor running up to exactly 90°."""
        if divisor <= 0 or divisor % 2:
            raise InvalidConfigError(f"a quarter grid needs an even divisor, got {divisor}")
        return cls.from_divisor(divisor, divisor // 2)

    def node(self, n: int) -> Angle:
        return Angle(n * self.epsilon.radians)

    @property
    def nodes(self) -> tuple[Angle, ...]:
        return tuple(self.node(n) for n in range(1, self.count + 1))

    def __iter__(self) -> Iterator[Angle]:
        return iter(self.nodes)

    def __len__(self) -> int:
        return self.count

    @property
    def span(self) -> Angle:
        return self.node(self.count)

    @property
    def extends_past_quadrant(self) -> bool:
        return self.span.radians > QUARTER_TURN * (1.0 + 1e-12)

    @property
    def pi_fraction(self) -> Fraction:
        """ε/π as the nearest small rational (1/48 for the classical grid)."""
        return Fraction(self.epsilon.radians / math.pi).limit_denominator(_MAX_PI_DIVISOR)


class RecursionMode(str, Enum):
    HISTORICAL = "historical"
    EXACT = "exact"


def _pi_ratio(grid: AngleGrid) -> Fraction:
    """ε/π, as the small rational when that reproduces ε, else exactly."""
    frac = grid.pi_fraction
    if frac and math.isclose(float(frac) * math.pi, grid.epsilon.radians, rel_tol=1e-12):
        return frac
    return Fraction(grid.epsilon.radians / math.pi)


def historical_step(grid: AngleGrid, pi_value: float = HISTORICAL_PI) -> float:
    """The step as the old tables state it: π_h·(ε/π) rounded to 4 places.

    Steps below 0.001 get as many places as it takes to keep three significant
    figures. Exact rational arithmetic keeps the tie 3.1416/48 = 0.06545
    deterministic.

    >>> historical_step(AngleGrid.from_divisor(48, 24))
    0.0654
    >>> historical_step(AngleGrid.from_divisor(80, 40))
    0.0393
    >>> historical_step(AngleGrid(Angle(1e-5), 10))
    1e-05
    """
    exact = Fraction(repr(pi_value)) * _pi_ratio(grid)
    step = Decimal(exact.numerator) / Decimal(exact.denominator)
    digits = max(HISTORICAL_STEP_DIGITS, HISTORICAL_STEP_FIGURES - 1 - step.adjusted())
    quantum = Decimal(1).scaleb(-digits)
    rounded = step.quantize(quantum, rounding=ROUND_HALF_EVEN)
    if rounded <= 0 or abs(rounded - step) > quantum / 2:
        raise InvalidConfigError(
            f"historical step for ε = {grid.epsilon.radians!r} rad rounds to {rounded}, "
            f"not within {quantum / 2} of {step:.6e}"
        )
    return float(rounded)


@dataclass(frozen=True)
class RecursionConfig:
    """Everything the second-difference recursion needs.

    Historical mode bundles three period approximations: π = 3.1416,
    δs₁ = ε and K = ε². Exact mode uses δs₁ = sin ε and K = (2·sin(ε/2))².
    """

    grid: AngleGrid
    mode: RecursionMode = RecursionMode.EXACT
    pi_value: float = math.pi
    seed_first_difference: float | None = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", RecursionMode(self.mode))
        if not math.isfinite(self.pi_value) or self.pi_value <= 0.0:
            raise InvalidConfigError(f"pi_value must be a positive number, got {self.pi_value!r}")
        expected = self._expected_seed()
        if self.seed_first_difference is None:
            object.__setattr__(self, "seed_first_difference", expected)
        elif not math.isclose(self.seed_first_difference, expected, rel_tol=1e-12, abs_tol=0.0):
            raise InvalidConfigError(
                f"{self.mode.value} mode requires seed δs₁ = {expected!r}, got {self.seed_first_difference!r}"
            )

    @classmethod
    def historical(cls, grid: AngleGrid, pi_value: float = HISTORICAL_PI) -> RecursionConfig:
        return cls(grid=grid, mode=RecursionMode.HISTORICAL, pi_value=pi_value)

    @classmethod
    def exact(cls, grid: AngleGrid) -> RecursionConfig:
        return cls(grid=grid, mode=RecursionMode.EXACT, pi_value=math.pi)

    @classmethod
    def preset(cls, name: str) -> RecursionConfig:
        try:
            divisor, count, mode = PRESETS[name]
        except KeyError:
            known = ", ".join(sorted(PRESETS))
            raise InvalidConfigError(f"unknown preset {name!r}; known presets: {known}") from None
        grid = AngleGrid.from_divisor(divisor, count)
        return cls.historical(grid) if mode is RecursionMode.HISTORICAL else cls.exact(grid)

    def _expected_seed(self) -> float:
        if self.mode is RecursionMode.HISTORICAL:
            return historical_step(self.grid, self.pi_value)
        return math.sin(self.grid.epsilon.radians)

    @property
    def working_step(self) -> float:
        """The ε actually fed to the recursion."""
        if self.mode is RecursionMode.HISTORICAL:
            return historical_step(self.grid, self.pi_value)
        return self.grid.epsilon.radians

    @property
    def coefficient(self) -> float:
        """K in δs_n = δs_{n−1} − K·s_{n−1}."""
        if self.mode is RecursionMode.HISTORICAL:
            return self.working_step ** 2
        return (2.0 * math.sin(self.grid.epsilon.radians / 2.0)) ** 2


# name -> (π divisor, node count, mode)
PRESETS: dict[str, tuple[int, int, RecursionMode]] = {
    "aryabhata": (48, 24, RecursionMode.HISTORICAL),
    "exercise1": (80, 40, RecursionMode.HISTORICAL),
}


@dataclass(frozen=True)
class HalfAngleConfig:
    """Describes a table built by repeated halving on the grid π/(3·2^k)."""

    grid: AngleGrid
    halvings: int

    @property
    def mode(self) -> str:
        return "half-angle"
