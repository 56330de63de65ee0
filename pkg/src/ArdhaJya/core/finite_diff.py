"""Central differences and the second-difference oscillator.

Setting φ = ε in the difference identities gives

    (sin(θ+ε) − sin(θ−ε)) / (2·sin ε)            =  cos θ
    (sin(θ+ε) − 2·sin θ + sin(θ−ε)) / (2·sin(ε/2))² = −sin θ

exactly, for any ε. Replacing sin ε by ε (and 2·sin(ε/2) by ε) gives the
textbook central differences, which are only second-order accurate.
"""

from __future__ import annotations

import logging
import math
import sys
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from .angles import Angle, AngleLike, radians_of
from .errors import DegenerateStepError, InstabilityError, InvalidInputError
from .identities import reference_cos, reference_sin
from .recurrence import march_n

logger = logging.getLogger(__name__)

# ω·h at or above this makes the explicit scheme grow without bound.
STABILITY_LIMIT = 2.0


class Denominator(str, Enum):
    IDENTITY = "identity"
    TEXTBOOK = "textbook"


def _as_angle(value: AngleLike, what: str) -> Angle:
    return value if isinstance(value, Angle) else Angle(radians_of(value, what))


@dataclass(frozen=True)
class SampledPair:
    """Samples f(θ+ε) and f(θ−ε) around a centre θ."""

    theta: Angle
    epsilon: Angle
    f_plus: float
    f_minus: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", _as_angle(self.theta, "theta"))
        object.__setattr__(self, "epsilon", _as_angle(self.epsilon, "epsilon"))
        if self.epsilon.radians <= 0.0:
            raise InvalidInputError(f"half-width ε must be positive, got {self.epsilon.radians!r}")
        for name in ("f_plus", "f_minus"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"{name} must be finite, got {getattr(self, name)!r}")

    @classmethod
    def sample(cls, f: Callable[[float], float], theta: AngleLike, epsilon: AngleLike) -> SampledPair:
        t = radians_of(theta, "theta")
        e = radians_of(epsilon, "epsilon")
        return cls(Angle(t), Angle(e), f(t + e), f(t - e))

    @classmethod
    def of_sine(cls, theta: AngleLike, epsilon: AngleLike) -> SampledPair:
        return cls.sample(reference_sin, theta, epsilon)


def _checked(denominator: float, epsilon: float) -> float:
    if not math.isfinite(denominator) or abs(denominator) < sys.float_info.min:
        raise DegenerateStepError(f"step ε={epsilon!r} is too small: the denominator underflows to {denominator!r}")
    return denominator


def first_derivative_denominator(epsilon: float, variant: Denominator = Denominator.IDENTITY) -> float:
    if Denominator(variant) is Denominator.TEXTBOOK:
        return _checked(2.0 * epsilon, epsilon)
    return _checked(2.0 * math.sin(epsilon), epsilon)


def second_derivative_denominator(epsilon: float, variant: Denominator = Denominator.IDENTITY) -> float:
    if Denominator(variant) is Denominator.TEXTBOOK:
        return _checked(epsilon * epsilon, epsilon)
    return _checked((2.0 * math.sin(epsilon / 2.0)) ** 2, epsilon)


def central_first_derivative(pair: SampledPair, variant: Denominator = Denominator.IDENTITY) -> float:
    """(f_plus − f_minus) / (2·sin ε), or / (2ε) for the textbook variant.

    >>> round(central_first_derivative(
    ...     SampledPair(Angle(0.5847), Angle(0.061), 0.6, 0.5), Denominator.TEXTBOOK), 2)
    0.82
    """
    eps = pair.epsilon.radians
    return (pair.f_plus - pair.f_minus) / first_derivative_denominator(eps, variant)


def central_second_derivative(
    f_plus: float,
    f_center: float,
    f_minus: float,
    epsilon: AngleLike,
    variant: Denominator = Denominator.IDENTITY,
) -> float:
    """(f_plus − 2·f_center + f_minus) / (2·sin(ε/2))², or / ε² for the textbook variant."""
    eps = radians_of(epsilon, "epsilon")
    if eps <= 0.0:
        raise InvalidInputError(f"step ε must be positive, got {eps!r}")
    return (f_plus - 2.0 * f_center + f_minus) / second_derivative_denominator(eps, variant)


def sampled_second_derivative(
    f: Callable[[float], float],
    theta: AngleLike,
    epsilon: AngleLike,
    variant: Denominator = Denominator.IDENTITY,
) -> float:
    t = radians_of(theta, "theta")
    e = radians_of(epsilon, "epsilon")
    return central_second_derivative(f(t + e), f(t), f(t - e), e, variant)


@dataclass(frozen=True)
class OscillatorRun:
    """Positions y_0..y_N of y'' = −ω²·y sampled every h."""

    omega: float
    step_h: float
    y: tuple[float, ...]

    @property
    def t(self) -> tuple[float, ...]:
        return tuple(n * self.step_h for n in range(len(self.y)))

    @property
    def coefficient(self) -> float:
        return (self.omega * self.step_h) ** 2

    def exact(self, t: float) -> float:
        """The continuous solution through (0, y_0) and (h, y_1)."""
        y0, y1 = self.y[0], self.y[1]
        w, h = self.omega, self.step_h
        if w == 0.0:
            return y0 + (y1 - y0) * t / h
        b = (y1 - y0 * math.cos(w * h)) / math.sin(w * h)
        return y0 * math.cos(w * t) + b * math.sin(w * t)

    def errors(self, exact: Callable[[float], float] | None = None) -> list[float]:
        solution = exact or self.exact
        return [y - solution(t) for t, y in zip(self.t, self.y)]

    def max_error(self, exact: Callable[[float], float] | None = None) -> float:
        return max(abs(e) for e in self.errors(exact))

    def energy(self) -> list[float]:
        """y_{n+1}² + y_n² − (2 − (ωh)²)·y_{n+1}·y_n, constant along the scheme."""
        c = 2.0 - self.coefficient
        return [b * b + a * a - c * a * b for a, b in zip(self.y, self.y[1:])]

    def energy_drift(self) -> float:
        """Largest |E_n − E_0| / |E_0|; 0 for the null solution."""
        energies = self.energy()
        e0 = energies[0]
        if e0 == 0.0:
            return max(abs(e) for e in energies)
        return max(abs(e - e0) for e in energies) / abs(e0)


def integrate_shm(omega: float, step_h: float, steps: int, y0: float, y1: float) -> OscillatorRun:
    """March y_{n+1} = 2·y_n − y_{n−1} − (ωh)²·y_n for ``steps`` steps.

    The update is carried in difference form, the same arithmetic as the
    sine-table recursion, so ω = 1, h = ε, y_0 = 0, y_1 = ε reproduces the
    historical table value for value.
    """
    for name, value in (("omega", omega), ("step_h", step_h), ("y0", y0), ("y1", y1)):
        if not math.isfinite(value):
            raise InvalidInputError(f"{name} must be finite, got {value!r}")
    if step_h <= 0.0:
        raise InvalidInputError(f"step_h must be positive, got {step_h!r}")
    if steps < 2:
        raise InvalidInputError(f"need at least 2 steps, got {steps}")
    if abs(omega) * step_h >= STABILITY_LIMIT:
        raise InstabilityError(
            f"omega*h = {abs(omega) * step_h:.6g} is not below {STABILITY_LIMIT}; the explicit scheme is unstable"
        )
    k = (omega * step_h) ** 2
    logger.debug("shm omega=%r h=%r steps=%d k=%r", omega, step_h, steps, k)
    _, ys = march_n(y1, y1 - y0, k, steps)
    return OscillatorRun(omega=omega, step_h=step_h, y=(y0, *ys))


def oscillator_reference(run: OscillatorRun) -> list[tuple[float, float, float, float, float]]:
    """Rows (t, y, cos ωt, sin ωt, y − exact) for export."""
    rows = []
    for t, y in zip(run.t, run.y):
        wt = run.omega * t
        rows.append((t, y, reference_cos(wt), reference_sin(wt), y - run.exact(t)))
    return rows
