"""Tests for the similar-triangle construction."""

import math
import re

import hypothesis.strategies as st
import pytest
from hypothesis import given

from src.ArdhaJya.core.angles import Angle
from src.ArdhaJya.core.errors import SceneDomainError, VerificationFailure
from src.ArdhaJya.core.geometry import (
    Point,
    angle_at,
    build_scene,
    measure_similarity,
    sweep_verify,
    verify_similarity,
)

QUARTER = math.pi / 2


@st.composite
def valid_angles(draw):
    theta = draw(st.floats(min_value=0.1, max_value=QUARTER - 0.1))
    share = draw(st.floats(min_value=0.05, max_value=0.95))
    return theta, share * min(theta, QUARTER - theta)


@pytest.fixture
def scene():
    return build_scene(Angle.from_degrees(50), Angle.from_degrees(10))


class TestScene:

    def test_points_sit_where_the_construction_puts_them(self, scene):
        assert scene["S"].x == scene["B"].x
        assert scene["S"].y == scene["C"].y
        assert scene["Q"] == Point(scene["B"].x, 0.0)
        for name in ("A", "B", "C"):
            assert scene.length("O", name) == pytest.approx(1.0, abs=1e-15)

    def test_chord_length(self, scene):
        assert scene.length("B", "C") == pytest.approx(2 * math.sin(math.radians(10)), abs=1e-14)

    def test_rows_in_fixed_order(self, scene):
        assert [name for name, _, _ in scene.as_rows()] == ["O", "X", "Y", "A", "B", "C", "P", "Q", "R", "S"]

    @pytest.mark.parametrize(
        ("theta", "phi", "message"),
        [
            (10.0, 10.0, "φ < θ"),
            (20.0, 30.0, "φ < θ"),
            (50.0, 45.0, "θ + φ < π/2"),
            (50.0, 0.0, "0 < φ"),
            (50.0, -5.0, "0 < φ"),
        ],
    )
    def test_domain(self, theta, phi, message):
        with pytest.raises(SceneDomainError, match=re.escape(message)):
            build_scene(math.radians(theta), math.radians(phi))


class TestSimilarity:

    def test_fifty_and_ten_degrees(self, scene):
        report = verify_similarity(scene)
        assert report.angle_sbc.degrees == pytest.approx(50.0, abs=1e-10)
        assert report.angle_obc.degrees == pytest.approx(80.0, abs=1e-10)
        k = 2 * math.sin(math.radians(10))
        for ratio in (report.ratio_bs_op, report.ratio_cs_ap, report.ratio_bc_oa):
            assert ratio == pytest.approx(k, abs=1e-12)
        assert report.derived_sine_diff == pytest.approx(k * math.cos(math.radians(50)), abs=1e-15)
        assert report.derived_cosine_diff == pytest.approx(-k * math.sin(math.radians(50)), abs=1e-15)
        assert "BS/OP" in report.to_text()

    @given(valid_angles())
    def test_holds_across_the_domain(self, angles):
        theta, phi = angles
        report = verify_similarity(build_scene(theta, phi), 1e-12)
        assert report.passes(1e-12)

    def test_failure_carries_report(self, scene):
        with pytest.raises(VerificationFailure) as info:
            verify_similarity(scene, tol=0.0)
        assert info.value.report.theta == scene.theta
        assert isinstance(info.value, AssertionError)

    def test_measure_does_not_raise(self, scene):
        assert measure_similarity(scene).discrepancy < 1e-12

    def test_angle_at_right_angle(self):
        assert angle_at(Point(0.0, 0.0), Point(1.0, 0.0), Point(0.0, 2.0)) == pytest.approx(math.pi / 2)


class TestSweep:

    def test_hundred_by_hundred(self):
        summary = sweep_verify(100, 100)
        assert summary.total == 10_000
        assert summary.ok
        assert summary.pass_rate == 1.0
        assert summary.worst_discrepancy < 1e-10
        assert "OK" in summary.to_text()

    @pytest.mark.parametrize("theta_degrees", [50.0, 60.0, 75.0])
    @pytest.mark.parametrize("gap", [1e-3, 1e-6, 1e-9])
    def test_stays_within_bound_near_the_quarter_turn(self, theta_degrees, gap):
        theta = math.radians(theta_degrees)
        phi = QUARTER - theta - gap
        assert 0.0 < phi < theta
        report = measure_similarity(build_scene(theta, phi))
        assert report.discrepancy < 1e-10
        verify_similarity(build_scene(theta, phi), tol=1e-10)

    def test_single_cell(self):
        summary = sweep_verify(1, 1)
        assert summary.total == 1
        point = summary.points[0]
        assert point.theta == pytest.approx(math.pi / 4)
        assert point.phi == pytest.approx(math.pi / 8)
        assert summary.ok

    def test_every_sample_is_inside_the_domain(self):
        for p in sweep_verify(7, 5).points:
            assert 0.0 < p.phi < p.theta
            assert p.theta + p.phi < QUARTER

    def test_empty_sweep_rejected(self):
        with pytest.raises(SceneDomainError):
            sweep_verify(0, 10)

    def test_impossible_tolerance_counts_failures(self):
        summary = sweep_verify(4, 4, tol=0.0)
        assert not summary.ok
        assert summary.passed < summary.total
        assert "FAIL" in summary.to_text()
