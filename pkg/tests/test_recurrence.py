"""Tests for the shared second-difference march."""

import time

import pytest

from src.ArdhaJya.core import recurrence
from src.ArdhaJya.core.grid import AngleGrid, RecursionConfig
from src.ArdhaJya.core.recurrence import march, march_n
from src.ArdhaJya.core.table import generate_recursion_table


def test_first_values():
    k = 0.0654 ** 2
    steps = march(0.0654, 0.0654, k)
    assert next(steps) == (0.0654, 0.0654)
    delta, y = next(steps)
    assert delta == 0.0654 - k * 0.0654
    assert y == 0.0654 + delta


def test_march_n_empty():
    assert march_n(1.0, 1.0, 0.1, 0) == ([], [])


@pytest.mark.slow
def test_table_steps_scale_linearly(monkeypatch):
    taken = []
    original = recurrence.march

    def counting(*args):
        for item in original(*args):
            taken.append(1)
            yield item

    monkeypatch.setattr(recurrence, "march", counting)
    for n in (10_000, 20_000):
        taken.clear()
        generate_recursion_table(RecursionConfig.exact(AngleGrid.from_divisor(2 * n, n)))
        assert len(taken) == n


@pytest.mark.slow
def test_doubling_count_at_most_about_doubles_time():
    def best_of_three(n):
        timings = []
        for _ in range(3):
            start = time.perf_counter()
            march_n(1e-6, 1e-6, 1e-12, n)
            timings.append(time.perf_counter() - start)
        return min(timings)

    base = best_of_three(200_000)
    doubled = best_of_three(400_000)
    assert doubled / base < 3.0
