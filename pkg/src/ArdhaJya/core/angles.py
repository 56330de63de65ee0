from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Union

from .errors import InvalidInputError

# Radius of Aryabhata's circle in minutes of arc. The table convention is the
# rounded 3438; the exact minutes-per-radian lives only in MINUTES_PER_RADIAN.
RSINE_RADIUS = 3438
MINUTES_PER_RADIAN = 10800.0 / math.pi
# "Asanna" (proximate) value of pi, 62832 / 20000.
HISTORICAL_PI = 3.1416


def _require_finite(value: float, what: str) -> float:
	if not math.isfinite(value):
		raise InvalidInputError(f"{what} must be finite, got {value!r}")
	return float(value)


@dataclass(frozen=True, order=True)
class Angle:
	"""An angle held in radians; degrees and minutes are views."""
	radians: float

	def __post_init__(self) -> None:
		_require_finite(self.radians, "angle")

	@classmethod
	def from_degrees(cls, degrees: float) -> Angle:
		return cls(math.radians(_require_finite(degrees, "angle in degrees")))

	@classmethod
	def from_arcminutes(cls, minutes: float | Arcminutes) -> Angle:
		value = minutes.value if isinstance(minutes, Arcminutes) else minutes
		return cls(_require_finite(value, "angle in minutes") / MINUTES_PER_RADIAN)

	@property
	def degrees(self) -> float:
		return math.degrees(self.radians)

	def to_arcminutes(self) -> Arcminutes:
		return Arcminutes(self.radians * MINUTES_PER_RADIAN)

	def __add__(self, other: Angle) -> Angle:
		return Angle(self.radians + other.radians)

	def __sub__(self, other: Angle) -> Angle:
		return Angle(self.radians - other.radians)

	def __neg__(self) -> Angle:
		return Angle(-self.radians)

	def __mul__(self, k: float) -> Angle:
		return Angle(self.radians * k)

	__rmul__ = __mul__

	def __truediv__(self, k: float) -> Angle:
		return Angle(self.radians / k)

	def __float__(self) -> float:
		return self.radians


@dataclass(frozen=True)
class Arcminutes:
	value: float

	def __post_init__(self) -> None:
		_require_finite(self.value, "arcminutes")

	def to_angle(self) -> Angle:
		return Angle.from_arcminutes(self)

	@property
	def degrees(self) -> float:
		return self.value / 60.0


@dataclass(frozen=True)
class RsineValue:
	"""A sine scaled by the radius 3438: raw product and its rounding."""
	raw: float
	rounded: int

	@property
	def rounding_error(self) -> float:
		return abs(self.raw - self.rounded)


AngleLike = Union[Angle, float, int]


def radians_of(theta: AngleLike, what: str = "angle") -> float:
	"""Plain radians from an Angle or a bare number, rejecting NaN/inf."""
	if isinstance(theta, Angle):
		return theta.radians
	return _require_finite(float(theta), what)


def round_half_away(x: float) -> int:
	# Decimal(x) is exact, so genuine ties are detected without float slop.
	return int(Decimal(x).quantize(Decimal(1), rounding=ROUND_HALF_UP))


def to_rsine(sine_value: float) -> RsineValue:
	"""Rsine: the sine times 3438, rounded to whole minutes.

	>>> to_rsine(0.5).rounded
	1719
	>>> to_rsine(0.0654).rounded
	225
	"""
	raw = _require_finite(sine_value, "sine value") * RSINE_RADIUS
	return RsineValue(raw=raw, rounded=round_half_away(raw))


def sine_to_minutes(sine_value: float) -> float:
	return _require_finite(sine_value, "sine value") * RSINE_RADIUS
