"""Sine/cosine difference identities and the reference oracle.

sin(θ+φ) − sin(θ−φ) =  2·sin φ·cos θ
cos(θ+φ) − cos(θ−φ) = −2·sin φ·sin θ
"""

from __future__ import annotations

import math

from .angles import AngleLike, radians_of


def reference_sin(theta: AngleLike) -> float:
	"""Platform double sine, treated as exact to 1e-15 relative."""
	return math.sin(radians_of(theta))


def reference_cos(theta: AngleLike) -> float:
	return math.cos(radians_of(theta))


def sine_diff_rhs(theta: AngleLike, phi: AngleLike) -> float:
	"""Right-hand side of the sine difference: 2·sin(φ)·cos(θ)."""
	t = radians_of(theta, "theta")
	p = radians_of(phi, "phi")
	return 2.0 * reference_sin(p) * reference_cos(t)


def cosine_diff_rhs(theta: AngleLike, phi: AngleLike) -> float:
	"""Right-hand side of the cosine difference: −2·sin(φ)·sin(θ)."""
	t = radians_of(theta, "theta")
	p = radians_of(phi, "phi")
	return -2.0 * reference_sin(p) * reference_sin(t)


def sine_diff_lhs(theta: AngleLike, phi: AngleLike) -> float:
	t = radians_of(theta, "theta")
	p = radians_of(phi, "phi")
	return reference_sin(t + p) - reference_sin(t - p)


def cosine_diff_lhs(theta: AngleLike, phi: AngleLike) -> float:
	t = radians_of(theta, "theta")
	p = radians_of(phi, "phi")
	return reference_cos(t + p) - reference_cos(t - p)
