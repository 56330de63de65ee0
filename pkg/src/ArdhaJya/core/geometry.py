"""Coordinate check of the similar-triangle derivation on a unit quadrant.

A, B, C sit on the unit circle at θ, θ+φ and θ−φ. P, Q, R are the feet of
their perpendiculars on OX and S is the foot of the perpendicular from C
onto BQ. Triangles BSC and OPA are similar, which gives

    BS = BQ − CR = sin(θ+φ) − sin(θ−φ) = 2·sin φ·cos θ
    CS = OR − OQ = cos(θ−φ) − cos(θ+φ) = 2·sin φ·sin θ
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from .angles import Angle, AngleLike, radians_of
from .errors import SceneDomainError, VerificationFailure
from .grid import QUARTER_TURN

logger = logging.getLogger(__name__)

POINT_NAMES = ("O", "X", "Y", "A", "B", "C", "P", "Q", "R", "S")
DEFAULT_POINT_TOLERANCE = 1e-12
DEFAULT_SWEEP_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __add__(self, p: Point) -> Point:
        return Point(self.x + p.x, self.y + p.y)

    def __sub__(self, p: Point) -> Point:
        return Point(self.x - p.x, self.y - p.y)

    def dot(self, p: Point) -> float:
        return self.x * p.x + self.y * p.y

    def cross(self, p: Point) -> float:
        return self.x * p.y - self.y * p.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, p: Point) -> float:
        return (self - p).norm()

    def close(self, p: Point, tol: float = 1e-12) -> bool:
        return self.distance(p) < tol


def angle_at(vertex: Point, a: Point, b: Point) -> float:
    """Angle a–vertex–b in radians.

    atan2(|u×v|, u·v) stays accurate for nearly parallel rays, where the
    inverse cosine of a clamped dot product loses digits.
    """
    u, v = a - vertex, b - vertex
    return math.atan2(abs(u.cross(v)), u.dot(v))


@dataclass(frozen=True)
class GeometryScene:
    theta: Angle
    phi: Angle
    points: dict[str, Point] = field(hash=False)

    def __getitem__(self, name: str) -> Point:
        return self.points[name]

    def length(self, a: str, b: str) -> float:
        return self.points[a].distance(self.points[b])

    def as_rows(self) -> Iterator[tuple[str, float, float]]:
        for name in POINT_NAMES:
            p = self.points[name]
            yield name, p.x, p.y


def build_scene(theta: AngleLike, phi: AngleLike) -> GeometryScene:
    """Place the ten named points for 0 < φ < θ and θ + φ < π/2.

    >>> s = build_scene(Angle.from_degrees(50), Angle.from_degrees(10))
    >>> s["S"].x == s["B"].x and s["S"].y == s["C"].y
    True
    """
    t = radians_of(theta, "theta")
    p = radians_of(phi, "phi")
    if not p > 0.0:
        raise SceneDomainError(f"need 0 < φ; got φ = {p!r}")
    if not p < t:
        raise SceneDomainError(f"need φ < θ so that C lies above OX; got θ = {t!r}, φ = {p!r}")
    if not t + p < QUARTER_TURN:
        raise SceneDomainError(f"need θ + φ < π/2 so that B lies below OY; got θ + φ = {t + p!r}")
    a = Point(math.cos(t), math.sin(t))
    b = Point(math.cos(t + p), math.sin(t + p))
    c = Point(math.cos(t - p), math.sin(t - p))
    points = {
        "O": Point(0.0, 0.0),
        "X": Point(1.0, 0.0),
        "Y": Point(0.0, 1.0),
        "A": a,
        "B": b,
        "C": c,
        "P": Point(a.x, 0.0),
        "Q": Point(b.x, 0.0),
        "R": Point(c.x, 0.0),
        "S": Point(b.x, c.y),
    }
    return GeometryScene(theta=Angle(t), phi=Angle(p), points=points)


@dataclass(frozen=True)
class SimilarityReport:
    theta: Angle
    phi: Angle
    angle_sbc: Angle
    angle_obc: Angle
    ratio_bs_op: float
    ratio_cs_ap: float
    ratio_bc_oa: float
    max_ratio_discrepancy: float
    derived_sine_diff: float
    derived_cosine_diff: float

    @property
    def angle_error(self) -> float:
        return abs(self.angle_sbc.radians - self.theta.radians)

    @property
    def discrepancy(self) -> float:
        return max(self.angle_error, self.max_ratio_discrepancy)

    def passes(self, tol: float) -> bool:
        return self.angle_error < tol and self.max_ratio_discrepancy < tol

    def to_text(self) -> str:
        return "\n".join([
            f"Similarity BSC ~ OPA at θ={self.theta.degrees:.6g}°, φ={self.phi.degrees:.6g}°",
            f"  ∠SBC = {self.angle_sbc.degrees:.12f}° (|∠SBC − θ| = {self.angle_error:.3e} rad)",
            f"  ∠OBC = {self.angle_obc.degrees:.12f}° (90° − φ = {90.0 - self.phi.degrees:.12f}°)",
            f"  BS/OP = {self.ratio_bs_op:.15f}",
            f"  CS/AP = {self.ratio_cs_ap:.15f}",
            f"  BC/OA = {self.ratio_bc_oa:.15f}",
            f"  max ratio discrepancy = {self.max_ratio_discrepancy:.3e}",
            f"  BS  = {self.derived_sine_diff:.15f}",
            f"  −CS = {self.derived_cosine_diff:.15f}",
        ])


def measure_similarity(scene: GeometryScene) -> SimilarityReport:
    """All measurements of :func:`verify_similarity`, without judging them."""
    pts = scene.points
    b, c, s = pts["B"], pts["C"], pts["S"]
    bs = b.y - s.y
    cs = c.x - s.x
    ratios = (
        bs / scene.length("O", "P"),
        cs / scene.length("A", "P"),
        scene.length("B", "C") / scene.length("O", "A"),
    )
    spread = max(abs(r1 - r2) for i, r1 in enumerate(ratios) for r2 in ratios[i + 1:])
    return SimilarityReport(
        theta=scene.theta,
        phi=scene.phi,
        angle_sbc=Angle(angle_at(b, s, c)),
        angle_obc=Angle(angle_at(b, pts["O"], c)),
        ratio_bs_op=ratios[0],
        ratio_cs_ap=ratios[1],
        ratio_bc_oa=ratios[2],
        max_ratio_discrepancy=spread,
        derived_sine_diff=bs,
        derived_cosine_diff=-cs,
    )


def verify_similarity(scene: GeometryScene, tol: float = DEFAULT_POINT_TOLERANCE) -> SimilarityReport:
    """Check ∠SBC = θ and BS/OP = CS/AP = BC/OA to ``tol``; raise otherwise."""
    report = measure_similarity(scene)
    if not report.passes(tol):
        raise VerificationFailure(
            f"similarity check failed at θ={scene.theta.radians!r}, φ={scene.phi.radians!r}: "
            f"|∠SBC − θ| = {report.angle_error:.3e}, ratio spread = {report.max_ratio_discrepancy:.3e}, tol = {tol:.1e}",
            report,
        )
    return report


@dataclass(frozen=True)
class SweepPoint:
    theta: float
    phi: float
    discrepancy: float
    passed: bool


@dataclass(frozen=True)
class SweepSummary:
    total: int
    passed: int
    worst_discrepancy: float
    worst_theta: float
    worst_phi: float
    tol: float
    points: tuple[SweepPoint, ...] = field(default=(), repr=False)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    @property
    def pass_rate(self) -> float:
        return self.passed / self.total if self.total else 1.0

    def to_text(self) -> str:
        return "\n".join([
            f"Sweep: {'OK' if self.ok else 'FAIL'} ({self.passed}/{self.total} scenes within {self.tol:.1e})",
            f"  worst discrepancy = {self.worst_discrepancy:.3e} "
            f"at θ={math.degrees(self.worst_theta):.6g}°, φ={math.degrees(self.worst_phi):.6g}°",
        ])


def sweep_angles(theta_steps: int, phi_steps: int) -> Iterator[tuple[float, float]]:
    """Cell-centred (θ, φ) over the open region 0 < φ < min(θ, π/2 − θ)."""
    thetas = (np.arange(theta_steps) + 0.5) / theta_steps * QUARTER_TURN
    fractions = (np.arange(phi_steps) + 0.5) / phi_steps
    for t in thetas:
        limit = min(t, QUARTER_TURN - t)
        for f in fractions:
            yield float(t), float(f * limit)


def sweep_verify(theta_steps: int, phi_steps: int, tol: float = DEFAULT_SWEEP_TOLERANCE) -> SweepSummary:
    """Verify every scene on a θ×φ grid; failures are counted, never raised."""
    if theta_steps < 1 or phi_steps < 1:
        raise SceneDomainError(f"sweep needs at least one step per axis, got {theta_steps}×{phi_steps}")
    points: list[SweepPoint] = []
    for t, p in sweep_angles(theta_steps, phi_steps):
        report = measure_similarity(build_scene(t, p))
        points.append(SweepPoint(t, p, report.discrepancy, report.passes(tol)))
    worst = max(points, key=lambda sp: sp.discrepancy)
    summary = SweepSummary(
        total=len(points),
        passed=sum(1 for sp in points if sp.passed),
        worst_discrepancy=worst.discrepancy,
        worst_theta=worst.theta,
        worst_phi=worst.phi,
        tol=tol,
        points=tuple(points),
    )
    logger.debug("sweep %dx%d: %d/%d passed", theta_steps, phi_steps, summary.passed, summary.total)
    return summary
