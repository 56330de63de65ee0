"""Tests for comparison against the reference sine."""

import pytest

from src.ArdhaJya.core.compare import EXACT_SINE_TOLERANCE, compare_with_reference
from src.ArdhaJya.core.grid import AngleGrid, RecursionConfig
from src.ArdhaJya.core.half_angle import generate_half_angle_table, half_angle_grid
from src.ArdhaJya.core.table import SineTable, generate_recursion_table


def _report(config):
    table, _ = generate_recursion_table(config)
    return compare_with_reference(table)


def test_historical_preset_within_a_minute_of_the_printed_table():
    report = _report(RecursionConfig.preset("aryabhata"))
    assert report.mode == "historical"
    assert report.published_max_deviation == 1
    assert report.ok
    assert "OK" in report.to_text()


def test_historical_preset_against_modern_rsine():
    report = _report(RecursionConfig.preset("aryabhata"))
    last = report.entries[-1]
    assert last.rsine_minutes == 3440
    assert last.reference_rsine_minutes == 3438
    assert last.rsine_deviation == 2
    assert report.rsine_exceedances == 1
    assert report.worst is not None and report.worst.index == 24
    assert report.ok
    assert report.rule == "within 1 minute of the published minutes"
    assert f"rule                : {report.rule}" in report.to_text()


def test_rule_per_kind_of_table():
    assert _report(RecursionConfig.preset("exercise1")).rule == "within 1 minute of the rounded reference Rsine"
    assert _report(RecursionConfig.exact(AngleGrid.quarter(48))).rule == "|error| <= 1e-09 sine units"


def test_exact_mode_passes():
    report = _report(RecursionConfig.exact(AngleGrid.quarter(48)))
    assert report.ok
    assert report.max_abs_error <= EXACT_SINE_TOLERANCE
    assert report.published_max_deviation is None
    assert report.rsine_exceedances == 0


def test_exercise1_grid_is_judged_by_rounded_reference():
    report = _report(RecursionConfig.preset("exercise1"))
    assert report.published_max_deviation is None
    assert report.max_abs_error == pytest.approx(6.1626e-4, abs=1e-6)
    assert report.max_error_minutes == pytest.approx(6.1626e-4 * 3438, abs=5e-3)
    assert report.rsine_exceedances >= 1
    assert not report.ok
    assert "FAIL" in report.to_text()


def test_half_angle_table_compares_as_exact():
    report = compare_with_reference(generate_half_angle_table(half_angle_grid(4)))
    assert report.mode == "half-angle"
    assert report.ok


def test_empty_table():
    table = SineTable(config=RecursionConfig.exact(AngleGrid.quarter(48)), entries=())
    report = compare_with_reference(table)
    assert report.ok
    assert report.max_abs_error == 0.0
    assert report.worst is None


def test_warnings_carried_over():
    table, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.from_divisor(48, 30)))
    report = compare_with_reference(table)
    assert report.warnings == table.warnings
    assert "WARN" in report.to_text()
