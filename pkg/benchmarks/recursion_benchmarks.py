#!/usr/bin/env python3
"""
Recursion and verification benchmarks.

Times table generation for growing N (the recursion is O(N)), the half-angle
construction, the oscillator and the geometry sweep, and writes the timings
as JSON, CSV and a short markdown summary.
"""

import csv
import json
import math
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ArdhaJya.core import (
    AngleGrid,
    RecursionConfig,
    generate_half_angle_table,
    generate_recursion_table,
    half_angle_grid,
    integrate_shm,
    sweep_verify,
)


@dataclass
class BenchmarkResult:
    """Result of a benchmark run."""

    name: str
    duration_ms: float
    success: bool
    error: str | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "duration_ms": self.duration_ms,
            "success": self.success,
            "error": self.error,
            "metadata": self.metadata,
        }


class RecursionBenchmarks:
    """Benchmark suite for table generation and verification."""

    def __init__(self, output_dir: str = "benchmark_results"):
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(exist_ok=True)
        self.results: list[BenchmarkResult] = []

    def _time(self, name: str, fn: Callable[[], dict[str, Any]]) -> None:
        start_time = time.perf_counter()
        try:
            metadata = fn()
        except Exception as e:  # a failed case is recorded, not fatal
            self.results.append(BenchmarkResult(name, (time.perf_counter() - start_time) * 1000, False, str(e)))
            return
        duration_ms = (time.perf_counter() - start_time) * 1000
        self.results.append(BenchmarkResult(name, duration_ms, True, metadata=metadata))

    def run_all_benchmarks(self) -> list[BenchmarkResult]:
        print("Starting recursion benchmarks")
        print("=" * 50)
        self._benchmark_recursion_scaling()
        self._benchmark_half_angle()
        self._benchmark_oscillator()
        self._benchmark_sweep()
        self._save_results()
        print(f"Completed {len(self.results)} benchmarks")
        return self.results

    def _benchmark_recursion_scaling(self):
        print("Benchmarking recursion for growing N...")
        for n in (1_000, 10_000, 100_000):
            def build(n: int = n) -> dict[str, Any]:
                config = RecursionConfig.exact(AngleGrid(math.pi / (2 * n), n))
                table, _ = generate_recursion_table(config)
                return {"count": n, "max_abs_error": max(e.abs_error for e in table.entries)}

            self._time(f"exact_recursion_{n}", build)

    def _benchmark_half_angle(self):
        print("Benchmarking half-angle tables...")
        for k in (4, 8, 10):
            def build(k: int = k) -> dict[str, Any]:
                table = generate_half_angle_table(half_angle_grid(k))
                return {"halvings": k, "count": len(table), "max_abs_error": max(e.abs_error for e in table.entries)}

            self._time(f"half_angle_k{k}", build)

    def _benchmark_oscillator(self):
        print("Benchmarking the oscillator...")

        def run() -> dict[str, Any]:
            result = integrate_shm(1.0, 0.01, 100_000, 0.0, math.sin(0.01))
            return {"steps": 100_000, "energy_drift": result.energy_drift()}

        self._time("shm_100000_steps", run)

    def _benchmark_sweep(self):
        print("Benchmarking the geometry sweep...")

        def run() -> dict[str, Any]:
            summary = sweep_verify(100, 100)
            return {"scenes": summary.total, "worst_discrepancy": summary.worst_discrepancy}

        self._time("geometry_sweep_100x100", run)

    def _save_results(self):
        json_file = self.output_dir / "benchmark_results.json"
        with open(json_file, "w") as f:
            json.dump([result.to_dict() for result in self.results], f, indent=2)

        rows = []
        for result in self.results:
            row = result.to_dict()
            for key, value in row.pop("metadata").items():
                row[f"meta_{key}"] = value
            rows.append(row)
        fieldnames = ["name", "duration_ms", "success", "error"]
        fieldnames += sorted({k for row in rows for k in row} - set(fieldnames))
        csv_file = self.output_dir / "benchmark_results.csv"
        with open(csv_file, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames)
            writer.writeheader()
            writer.writerows(rows)

        self._generate_summary_report()
        print(f"Results saved to {self.output_dir}")

    def _generate_summary_report(self):
        report_file = self.output_dir / "benchmark_summary.md"
        with open(report_file, "w") as f:
            f.write("# Recursion Benchmark Summary\n\n")
            f.write("| Benchmark | Duration (ms) | Status |\n")
            f.write("|-----------|---------------|--------|\n")
            for result in self.results:
                status = "ok" if result.success else f"failed: {result.error}"
                f.write(f"| {result.name} | {result.duration_ms:.2f} | {status} |\n")


def main():
    results = RecursionBenchmarks().run_all_benchmarks()
    failed = [r for r in results if not r.success]
    print("\nBenchmark Summary:")
    print(f"  Total: {len(results)}")
    print(f"  Failed: {len(failed)}")
    for r in results:
        print(f"  {r.name:<28} {r.duration_ms:10.2f} ms")


if __name__ == "__main__":
    main()
