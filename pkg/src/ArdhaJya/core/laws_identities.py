from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .angles import to_rsine
from .grid import QUARTER_TURN
from .identities import cosine_diff_lhs, cosine_diff_rhs, sine_diff_lhs, sine_diff_rhs
from .laws import ConfigDict, Law, LawResult, LawSuite, ResidualTracker, config_float, config_int


@dataclass(frozen=True)
class IdentityDomain:
	"""Random (θ, φ) in (0, π/2)² with θ + φ < π/2."""
	seed: int = 0
	samples: int = 10_000

	def pairs(self, config: ConfigDict) -> list[tuple[float, float]]:
		rng = np.random.default_rng(config_int(config, "seed", self.seed))
		wanted = config_int(config, "samples", self.samples)
		out: list[tuple[float, float]] = []
		while len(out) < wanted:
			draw = rng.uniform(0.0, QUARTER_TURN, size=(2 * wanted, 2))
			keep = draw[(draw[:, 0] + draw[:, 1] < QUARTER_TURN) & (draw.min(axis=1) > 0.0)]
			out.extend((float(t), float(p)) for t, p in keep[: wanted - len(out)])
		return out


@dataclass(frozen=True)
class _SineDifferenceLaw(Law[IdentityDomain]):
	name: str = "sine-difference"
	tags: Sequence[str] = ("identity", "core")

	def run(self, ctx: IdentityDomain, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-13))
		for t, p in ctx.pairs(config):
			tracker.check(abs(sine_diff_lhs(t, p) - sine_diff_rhs(t, p)),
				"sin(θ+φ) − sin(θ−φ) ≠ 2·sin φ·cos θ", {"theta": t, "phi": p})
		return tracker.result()


@dataclass(frozen=True)
class _CosineDifferenceLaw(Law[IdentityDomain]):
	name: str = "cosine-difference"
	tags: Sequence[str] = ("identity", "core")

	def run(self, ctx: IdentityDomain, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-13))
		for t, p in ctx.pairs(config):
			tracker.check(abs(cosine_diff_lhs(t, p) - cosine_diff_rhs(t, p)),
				"cos(θ+φ) − cos(θ−φ) ≠ −2·sin φ·sin θ", {"theta": t, "phi": p})
		return tracker.result()


@dataclass(frozen=True)
class _OddInPhiLaw(Law[IdentityDomain]):
	name: str = "odd-in-phi"
	tags: Sequence[str] = ("identity", "symmetry")

	def run(self, ctx: IdentityDomain, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "odd_tol", 1e-15))
		for t, p in ctx.pairs(config):
			tracker.check(abs(sine_diff_rhs(t, -p) + sine_diff_rhs(t, p)),
				"sine right-hand side not odd in φ", {"theta": t, "phi": p})
			tracker.check(abs(cosine_diff_rhs(t, -p) + cosine_diff_rhs(t, p)),
				"cosine right-hand side not odd in φ", {"theta": t, "phi": p})
		return tracker.result()


@dataclass(frozen=True)
class _RsineRoundingLaw(Law[IdentityDomain]):
	name: str = "rsine-rounding"
	tags: Sequence[str] = ("rsine",)

	def run(self, ctx: IdentityDomain, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, 0.5)
		sines = sorted(float(np.sin(t)) for t, _ in ctx.pairs(config))
		previous = None
		for s in sines:
			r = to_rsine(s)
			tracker.check(r.rounding_error, "Rsine rounded more than half a minute away", {"sine": s})
			if previous is not None and r.rounded < previous:
				tracker.fail("Rsine not monotone", {"sine": s, "rounded": r.rounded, "previous": previous})
			previous = r.rounded
		return tracker.result()


IDENTITY_SUITE = LawSuite[IdentityDomain](
	"difference-identities",
	laws=[_SineDifferenceLaw(), _CosineDifferenceLaw(), _OddInPhiLaw(), _RsineRoundingLaw()],
)
