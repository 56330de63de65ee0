"""Tests for the second-difference recursion tables."""

import logging
import math

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from src.ArdhaJya.core.angles import HISTORICAL_PI, Angle
from src.ArdhaJya.core.compare import PUBLISHED_RSINE_MINUTES, PUBLISHED_SINES
from src.ArdhaJya.core.errors import EmptyGridError, InvalidConfigError, ModeMismatchError
from src.ArdhaJya.core.grid import AngleGrid, RecursionConfig, RecursionMode, historical_step
from src.ArdhaJya.core.table import (
    DifferenceSeries,
    SineTable,
    cosine_first_difference_check,
    first_difference_check,
    generate_recursion_table,
    second_difference_check,
    telescoping_residual,
)


@pytest.fixture(scope="module")
def aryabhata():
    table, series = generate_recursion_table(RecursionConfig.preset("aryabhata"))
    return table, series


@pytest.fixture(scope="module")
def exercise1():
    table, _ = generate_recursion_table(RecursionConfig.preset("exercise1"))
    return table


class TestHistoricalTable:

    def test_step_rounded_to_four_places(self):
        assert historical_step(AngleGrid.from_divisor(48, 24)) == 0.0654
        assert historical_step(AngleGrid.from_divisor(80, 40)) == 0.0393

    @pytest.mark.parametrize("epsilon", [1e-3, 2e-4, 1e-5, 8.7e-6, 1e-8])
    def test_fine_grid_step_keeps_three_figures(self, epsilon):
        step = historical_step(AngleGrid(Angle(epsilon), 3))
        assert step > 0.0
        assert step == pytest.approx(epsilon * HISTORICAL_PI / math.pi, rel=5e-3)

    def test_fine_grid_table_does_not_collapse(self):
        grid = AngleGrid(Angle(1e-5), 10)
        config = RecursionConfig.historical(grid)
        assert config.seed_first_difference == pytest.approx(1e-5)
        table, _ = generate_recursion_table(config)
        sines = table.sines
        assert all(later > earlier for earlier, later in zip(sines, sines[1:]))
        assert sines[-1] == pytest.approx(1e-4, rel=1e-3)
        assert max(e.abs_error for e in table.entries) < 1e-8

    def test_preset_configuration(self):
        config = RecursionConfig.preset("aryabhata")
        assert config.mode is RecursionMode.HISTORICAL
        assert config.grid.count == 24
        assert config.seed_first_difference == 0.0654
        assert config.coefficient == 0.0654 ** 2

    def test_reproduces_published_sines(self, aryabhata):
        table, _ = aryabhata
        assert len(table) == 24
        for n, published in enumerate(PUBLISHED_SINES, start=1):
            assert round(table[n].computed_sine, 4) == pytest.approx(published, abs=1e-12), n

    def test_thirty_degrees(self, aryabhata):
        table, _ = aryabhata
        assert table[8].rsine.rounded == 1719
        assert table[8].computed_sine == pytest.approx(0.50000281, abs=1e-8)

    def test_rsine_minutes_against_printed_column(self, aryabhata):
        table, _ = aryabhata
        computed = [e.rsine.rounded for e in table.entries]
        off = {n: (c, p) for n, (c, p) in enumerate(zip(computed, PUBLISHED_RSINE_MINUTES), start=1) if c != p}
        assert off == {6: (1316, 1315), 7: (1521, 1520), 24: (3440, 3439)}

    def test_last_node_overshoots_one(self, aryabhata):
        table, _ = aryabhata
        assert table[24].computed_sine == pytest.approx(1.00053465, abs=1e-8)

    def test_exact_checks_refuse_historical_tables(self, aryabhata):
        table, series = aryabhata
        with pytest.raises(ModeMismatchError):
            first_difference_check(table)
        with pytest.raises(ModeMismatchError):
            second_difference_check(series, table)
        with pytest.raises(ModeMismatchError):
            cosine_first_difference_check(table)

    def test_telescoping(self, aryabhata):
        table, series = aryabhata
        assert telescoping_residual(series, table) <= 1e-15

    def test_second_differences_are_differences_of_first(self, aryabhata):
        _, series = aryabhata
        assert len(series.second) == 23
        for i, d2 in enumerate(series.second):
            assert d2 == series.first[i + 1] - series.first[i]

    def test_exercise1_error_peaks_at_54_degrees(self, exercise1):
        worst = max(exercise1.entries, key=lambda e: e.abs_error)
        assert worst.index == 24
        assert worst.angle.degrees == pytest.approx(54.0)
        assert worst.abs_error == pytest.approx(6.1626e-4, abs=1e-6)
        assert exercise1[40].computed_sine == pytest.approx(1.0001923, abs=1e-6)


class TestExactTable:

    @pytest.mark.parametrize("divisor", [12, 48, 80, 96])
    def test_matches_reference(self, divisor):
        table, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.quarter(divisor)))
        assert len(table) == divisor // 2
        assert max(e.abs_error for e in table.entries) < 1e-12

    @pytest.mark.parametrize("divisor", [12, 48, 80, 96])
    def test_difference_checks(self, divisor):
        table, series = generate_recursion_table(RecursionConfig.exact(AngleGrid.quarter(divisor)))
        assert first_difference_check(table) < 1e-12
        assert second_difference_check(series, table) < 1e-12
        assert cosine_first_difference_check(table) < 1e-12

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=3, max_value=100))
    def test_any_quarter_grid(self, half):
        table, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.quarter(2 * half)))
        assert max(e.abs_error for e in table.entries) < 1e-12
        assert table[half].computed_sine == pytest.approx(1.0, abs=1e-12)

    def test_single_node(self):
        grid = AngleGrid.from_divisor(48, 1)
        table, series = generate_recursion_table(RecursionConfig.exact(grid))
        assert len(table) == 1
        assert table[1].computed_sine == math.sin(math.pi / 48)
        assert series.second == ()
        assert second_difference_check(series, table) == 0.0

    def test_corrupted_entry_is_detected(self):
        table, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.quarter(48)))
        bad = table.perturbed(10, 1e-6)
        assert first_difference_check(bad) > 1e-7
        assert second_difference_check(DifferenceSeries.from_sines(bad.sines), bad) > 1e-7

    def test_cosines_and_versines_on_quarter_grid(self):
        table, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.quarter(48)))
        assert table.cosine(0) == 1.0
        assert table.cosine(24) == 0.0
        assert table.cosine(16) == table.sine(8)
        versines = table.versines()
        assert versines[-1] == 1.0
        assert versines[15] == pytest.approx(0.5, abs=1e-12)


class TestValidation:

    def test_empty_grid(self):
        with pytest.raises(EmptyGridError):
            AngleGrid.from_divisor(48, 0)

    def test_non_positive_step(self):
        with pytest.raises(InvalidConfigError):
            AngleGrid(0.0, 5)
        with pytest.raises(InvalidConfigError):
            AngleGrid(-0.1, 5)

    def test_divisor_too_large_for_a_float(self):
        with pytest.raises(InvalidConfigError, match="too large"):
            AngleGrid.from_divisor(10**400, 1)

    def test_seed_must_match_mode(self):
        grid = AngleGrid.from_divisor(48, 24)
        with pytest.raises(InvalidConfigError):
            RecursionConfig(grid, RecursionMode.EXACT, seed_first_difference=0.0654)
        with pytest.raises(InvalidConfigError):
            RecursionConfig(grid, RecursionMode.HISTORICAL, pi_value=3.1416, seed_first_difference=math.sin(math.pi / 48))

    def test_unknown_preset(self):
        with pytest.raises(InvalidConfigError, match="known presets"):
            RecursionConfig.preset("ptolemy")

    def test_indices_must_be_contiguous(self, aryabhata):
        table, _ = aryabhata
        with pytest.raises(InvalidConfigError):
            SineTable(config=table.config, entries=table.entries[1:])

    def test_grid_past_quadrant_warns(self, caplog):
        with caplog.at_level(logging.WARNING):
            table, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.from_divisor(48, 30)))
        assert table.warnings
        assert "past 90" in caplog.text
        assert len(table) == 30

    def test_difference_series_partial_sums(self):
        series = DifferenceSeries.from_first([1.0, 0.5, 0.25])
        assert series.second == (-0.5, -0.25)
        assert series.partial_sums() == [1.0, 1.5, 1.75]
        assert DifferenceSeries.from_sines([1.0, 1.5, 1.75]).first == (1.0, 0.5, 0.25)
