from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Generic, Protocol, TypeVar, Union

T = TypeVar("T")

WitnessValue = Union[str, int, float, bool, None]
WitnessDict = dict[str, WitnessValue]
ConfigValue = Union[str, int, float, bool, None]
ConfigDict = dict[str, ConfigValue]


@dataclass(frozen=True)
class Violation:
	law: str
	message: str
	witness: WitnessDict
	severity: str = "error"  # "error" | "warn"


@dataclass(frozen=True)
class LawResult:
	law: str
	passed: bool
	violations: Sequence[Violation]
	# largest residual seen, in the law's own units
	worst: float = 0.0


class Law(Protocol[T]):
	name: str
	tags: Sequence[str]
	def run(self, ctx: T, config: ConfigDict) -> LawResult: ...


@dataclass(frozen=True)
class LawSuite(Generic[T]):
	name: str
	laws: Sequence[Law[T]]


@dataclass(frozen=True)
class SuiteReport:
	suite: str
	results: Sequence[LawResult]

	@property
	def ok(self) -> bool:
		return all(r.passed for r in self.results)

	def result(self, law: str) -> LawResult:
		for r in self.results:
			if r.law == law:
				return r
		raise KeyError(f"no law named {law!r} in suite {self.suite!r}")

	def to_text(self) -> str:
		passed_count = sum(1 for r in self.results if r.passed)
		total_count = len(self.results)
		status_line = f"Suite {self.suite}: {'OK' if self.ok else 'FAIL'} (laws passed: {passed_count}/{total_count})"

		lines = [status_line]
		for r in self.results:
			status = "✓" if r.passed else "✗"
			lines.append(f"  [{status}] {r.law} (worst {r.worst:.3e})")
			if not r.passed:
				for v in r.violations[:5]:
					lines.append(f"    • {v.severity.upper()} {v.message} | witness={v.witness}")
				if len(r.violations) > 5:
					lines.append(f"    • ... {len(r.violations) - 5} more")
		return "\n".join(lines)


def run_suite(ctx: T, suite: LawSuite[T], *, config: ConfigDict | None = None) -> SuiteReport:
	cfg = config or {}
	return SuiteReport(suite=suite.name, results=[law.run(ctx, cfg) for law in suite.laws])


def config_float(config: ConfigDict, key: str, default: float) -> float:
	value = config.get(key, default)
	return float(value) if isinstance(value, (int, float, str)) and not isinstance(value, bool) else default


def config_int(config: ConfigDict, key: str, default: int) -> int:
	value = config.get(key, default)
	return int(value) if isinstance(value, (int, str)) and not isinstance(value, bool) else default


@dataclass
class ResidualTracker:
	"""Collects residuals for one law and turns them into a LawResult."""
	law: str
	tol: float
	worst: float = 0.0
	violations: list[Violation] = field(default_factory=list)

	def check(self, residual: float, message: str, witness: WitnessDict) -> None:
		if math.isnan(residual):
			residual = math.inf
		self.worst = max(self.worst, residual)
		if residual > self.tol:
			self.violations.append(Violation(self.law, message, {**witness, "residual": residual}))

	def fail(self, message: str, witness: WitnessDict) -> None:
		self.worst = math.inf
		self.violations.append(Violation(self.law, message, witness))

	def result(self) -> LawResult:
		return LawResult(self.law, passed=not self.violations, violations=self.violations, worst=self.worst)
