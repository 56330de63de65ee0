"""Tests for half-angle tables."""

import math

import pytest

from src.ArdhaJya.core.errors import UnsupportedGridError
from src.ArdhaJya.core.grid import AngleGrid, RecursionConfig
from src.ArdhaJya.core.half_angle import (
    MAX_HALVINGS,
    generate_half_angle_table,
    grid_halvings,
    half_angle_grid,
)
from src.ArdhaJya.core.table import generate_recursion_table


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_matches_reference(k):
    table = generate_half_angle_table(half_angle_grid(k))
    assert len(table) == 3 * 2 ** (k - 1)
    assert max(e.abs_error for e in table.entries) < 1e-12


def test_anchors_are_exact():
    table = generate_half_angle_table(half_angle_grid(4))
    assert table.grid.epsilon.radians == pytest.approx(math.pi / 48)
    assert table[8].computed_sine == 0.5
    assert table[24].computed_sine == 1.0
    assert table.mode == "half-angle"
    assert not table.is_historical


def test_partial_count():
    table = generate_half_angle_table(half_angle_grid(3, count=4))
    assert len(table) == 4
    assert table[4].computed_sine == 0.5


def test_grid_halvings_recognises_grids():
    assert grid_halvings(AngleGrid.from_divisor(48, 24)) == 4
    assert grid_halvings(AngleGrid.from_divisor(6, 3)) == 1


@pytest.mark.parametrize("divisor", [40, 80, 45, 3])
def test_unreachable_grid(divisor):
    with pytest.raises(UnsupportedGridError):
        generate_half_angle_table(AngleGrid.from_divisor(divisor, 1))


def test_past_quadrant_rejected():
    with pytest.raises(UnsupportedGridError, match="stop at 90"):
        generate_half_angle_table(AngleGrid.from_divisor(12, 7))


def test_needs_a_halving():
    with pytest.raises(UnsupportedGridError):
        half_angle_grid(0)


@pytest.mark.parametrize("k", [MAX_HALVINGS + 1, 30, 1100])
def test_depth_is_limited(k):
    with pytest.raises(UnsupportedGridError, match=f"at most k={MAX_HALVINGS}"):
        half_angle_grid(k)


def test_grid_past_the_depth_limit_rejected():
    with pytest.raises(UnsupportedGridError, match="at most"):
        generate_half_angle_table(AngleGrid.from_divisor(3 * 2 ** (MAX_HALVINGS + 1), 1))


def test_deepest_grid():
    table = generate_half_angle_table(half_angle_grid(MAX_HALVINGS))
    assert len(table) == 3 * 2 ** (MAX_HALVINGS - 1)
    assert table[len(table)].computed_sine == 1.0
    assert max(e.abs_error for e in table.entries) < 1e-10


def test_agrees_with_exact_recursion():
    halved = generate_half_angle_table(half_angle_grid(4))
    recursed, _ = generate_recursion_table(RecursionConfig.exact(AngleGrid.quarter(48)))
    assert len(halved) == len(recursed) == 24
    for h, r in zip(halved.entries, recursed.entries):
        assert h.index == r.index
        assert h.computed_sine == pytest.approx(r.computed_sine, abs=1e-10), h.index
