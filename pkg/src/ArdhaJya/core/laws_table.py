from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .grid import QUARTER_TURN
from .laws import ConfigDict, Law, LawResult, LawSuite, ResidualTracker, config_float
from .table import (
	DifferenceSeries,
	SineTable,
	first_difference_check,
	second_difference_check,
	telescoping_residual,
)


@dataclass(frozen=True)
class GeneratedTable:
	table: SineTable
	series: DifferenceSeries


@dataclass(frozen=True)
class _ContiguousLaw(Law[GeneratedTable]):
	name: str = "contiguous-indices"
	tags: Sequence[str] = ("table", "core")

	def run(self, ctx: GeneratedTable, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, 0.0)
		for expected, entry in enumerate(ctx.table.entries, start=1):
			if entry.index != expected:
				tracker.fail("index out of sequence", {"expected": expected, "index": entry.index})
		if len(ctx.series) != len(ctx.table):
			tracker.fail("series and table lengths differ", {"series": len(ctx.series), "table": len(ctx.table)})
		return tracker.result()


@dataclass(frozen=True)
class _TelescopingLaw(Law[GeneratedTable]):
	name: str = "telescoping"
	tags: Sequence[str] = ("table", "core")

	def run(self, ctx: GeneratedTable, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-12))
		tracker.check(telescoping_residual(ctx.series, ctx.table), "Σ δs_m ≠ s_n", {"mode": ctx.table.mode})
		return tracker.result()


@dataclass(frozen=True)
class _SecondDifferenceDefinitionLaw(Law[GeneratedTable]):
	name: str = "second-difference-definition"
	tags: Sequence[str] = ("table", "core")

	def run(self, ctx: GeneratedTable, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, 0.0)
		first, second = ctx.series.first, ctx.series.second
		for i, d2 in enumerate(second):
			tracker.check(abs(d2 - (first[i + 1] - first[i])), "δ²s_n ≠ δs_n − δs_{n−1}", {"n": i + 2})
		return tracker.result()


@dataclass(frozen=True)
class _MonotoneLaw(Law[GeneratedTable]):
	name: str = "monotone-below-quadrant"
	tags: Sequence[str] = ("table",)

	def run(self, ctx: GeneratedTable, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, 0.0)
		entries = [e for e in ctx.table.entries if e.angle.radians <= QUARTER_TURN * (1.0 + 1e-12)]
		for lo, hi in zip(entries, entries[1:]):
			if not hi.computed_sine > lo.computed_sine:
				tracker.fail("sine does not increase", {"n": hi.index, "s_n": hi.computed_sine, "s_prev": lo.computed_sine})
		return tracker.result()


@dataclass(frozen=True)
class _ExactIdentitiesLaw(Law[GeneratedTable]):
	name: str = "exact-difference-identities"
	tags: Sequence[str] = ("table", "exact")

	def run(self, ctx: GeneratedTable, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "tol", 1e-12))
		if ctx.table.is_historical:
			# historical tables carry the period approximations; nothing to check
			return tracker.result()
		tracker.check(first_difference_check(ctx.table), "δs_n ≠ 2·s_{1/2}·c_{n−1/2}", {})
		tracker.check(second_difference_check(ctx.series, ctx.table), "δ²s_n ≠ −4·s²_{1/2}·s_{n−1}", {})
		return tracker.result()


@dataclass(frozen=True)
class _ReferenceAgreementLaw(Law[GeneratedTable]):
	name: str = "reference-agreement"
	tags: Sequence[str] = ("table", "exact")

	def run(self, ctx: GeneratedTable, config: ConfigDict) -> LawResult:
		tracker = ResidualTracker(self.name, config_float(config, "reference_tol", 1e-10))
		if ctx.table.is_historical:
			return tracker.result()
		for e in ctx.table.entries:
			tracker.check(e.abs_error, "table differs from reference sine", {"n": e.index})
		return tracker.result()


TABLE_SUITE = LawSuite[GeneratedTable](
	"sine-table",
	laws=[
		_ContiguousLaw(),
		_TelescopingLaw(),
		_SecondDifferenceDefinitionLaw(),
		_MonotoneLaw(),
		_ExactIdentitiesLaw(),
		_ReferenceAgreementLaw(),
	],
)
