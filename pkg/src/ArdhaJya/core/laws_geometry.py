from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .geometry import GeometryScene, measure_similarity
from .identities import cosine_diff_rhs, sine_diff_rhs
from .laws import ConfigDict, Law, LawResult, LawSuite, ResidualTracker, config_float


@dataclass(frozen=True)
class _UnitRadiiLaw(Law[GeometryScene]):
	name: str = "unit-radii"
	tags: Sequence[str] = ("geometry", "construction")

	def run(self, ctx: GeometryScene, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "radius_tol", 1e-14))
		for p in ("A", "B", "C"):
			tracker.check(abs(ctx.length("O", p) - 1.0), f"|O{p}| ≠ 1", {"point": p})
		return tracker.result()


@dataclass(frozen=True)
class _PerpendicularFootLaw(Law[GeometryScene]):
	name: str = "perpendicular-foot"
	tags: Sequence[str] = ("geometry", "construction")

	def run(self, ctx: GeometryScene, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, 0.0)
		s, b, q, c = ctx["S"], ctx["B"], ctx["Q"], ctx["C"]
		tracker.check(abs(s.x - b.x) + abs(s.x - q.x), "S is not on BQ", {"S.x": s.x, "B.x": b.x})
		tracker.check(abs(s.y - c.y), "CS is not horizontal", {"S.y": s.y, "C.y": c.y})
		return tracker.result()


@dataclass(frozen=True)
class _IsoscelesLaw(Law[GeometryScene]):
	name: str = "isosceles-OBC"
	tags: Sequence[str] = ("geometry",)

	def run(self, ctx: GeometryScene, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "radius_tol", 1e-14))
		tracker.check(abs(ctx.length("O", "B") - ctx.length("O", "C")), "|OB| ≠ |OC|", {})
		return tracker.result()


@dataclass(frozen=True)
class _AnglesLaw(Law[GeometryScene]):
	name: str = "angles"
	tags: Sequence[str] = ("geometry", "similarity")

	def run(self, ctx: GeometryScene, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-12))
		report = measure_similarity(ctx)
		tracker.check(report.angle_error, "∠SBC ≠ θ", {"theta": ctx.theta.radians})
		expected_obc = math.pi / 2 - ctx.phi.radians
		tracker.check(abs(report.angle_obc.radians - expected_obc), "∠OBC ≠ 90° − φ", {"phi": ctx.phi.radians})
		return tracker.result()


@dataclass(frozen=True)
class _RatiosLaw(Law[GeometryScene]):
	name: str = "similar-ratios"
	tags: Sequence[str] = ("geometry", "similarity")

	def run(self, ctx: GeometryScene, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-12))
		report = measure_similarity(ctx)
		tracker.check(report.max_ratio_discrepancy, "BS/OP, CS/AP and BC/OA disagree",
			{"bs_op": report.ratio_bs_op, "cs_ap": report.ratio_cs_ap, "bc_oa": report.ratio_bc_oa})
		return tracker.result()


@dataclass(frozen=True)
class _AlgebraicAgreementLaw(Law[GeometryScene]):
	name: str = "geometric-equals-algebraic"
	tags: Sequence[str] = ("geometry", "identity")

	def run(self, ctx: GeometryScene, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-12))
		report = measure_similarity(ctx)
		t, p = ctx.theta, ctx.phi
		tracker.check(abs(report.derived_sine_diff - sine_diff_rhs(t, p)), "BS ≠ 2·sin φ·cos θ", {})
		tracker.check(abs(report.derived_cosine_diff - cosine_diff_rhs(t, p)), "−CS ≠ −2·sin φ·sin θ", {})
		return tracker.result()


GEOMETRY_SUITE = LawSuite[GeometryScene](
	"quadrant-construction",
	laws=[
		_UnitRadiiLaw(),
		_PerpendicularFootLaw(),
		_IsoscelesLaw(),
		_AnglesLaw(),
		_RatiosLaw(),
		_AlgebraicAgreementLaw(),
	],
)
