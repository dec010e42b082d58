import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from histmech.celestial import OrbitSpec
from histmech.errors import BracketError, DomainError
from histmech.kernels import find_root
from histmech.rotation import (
    FallPathSpec,
    RotatingBody,
    catch_up_difference,
    extrusion_limit_ratio,
    extrusion_verdict,
    numeric_extrusion_ratio,
    path_of_fall,
    tangential_rise,
)

EARTH = RotatingBody.earth()
FAST = RotatingBody.earth(spin_factor=100.0)


def rise_oracle(t, body):
    # exact Pythagorean height, fine at t = 1 s where there is no cancellation worth worrying about
    r, vt = body.radius, body.surface_speed * t
    return math.hypot(r, vt) - r


def test_rise_examples():
    assert tangential_rise(1.0, EARTH) == pytest.approx(0.01698, abs=5e-6)
    assert tangential_rise(0.0, EARTH) == 0.0
    assert tangential_rise(1.0, FAST) == pytest.approx(169.8, abs=0.05)


def test_rise_is_height_above_sphere():
    # a point at tangent distance x stands sqrt(R^2 + x^2) - R above the surface
    for body in (EARTH, FAST):
        assert tangential_rise(1.0, body) == pytest.approx(rise_oracle(1.0, body), rel=1e-3)


def test_limit_ratio_examples():
    assert extrusion_limit_ratio(EARTH) == pytest.approx(9.8 * 6.371e6 / 465.1**2, rel=1e-12)
    assert extrusion_limit_ratio(EARTH) == pytest.approx(288.6, abs=0.05)
    assert extrusion_limit_ratio(RotatingBody(1.0, 1.0, 1.0)) == 1.0
    assert extrusion_limit_ratio(FAST) == pytest.approx(0.02886, abs=1e-5)
    assert extrusion_limit_ratio(RotatingBody(1.0, 0.0, 1.0)) == math.inf


def test_numeric_ratio_approaches_limit():
    assert numeric_extrusion_ratio(EARTH) == pytest.approx(extrusion_limit_ratio(EARTH), rel=1e-4)


def test_verdicts():
    v = extrusion_verdict(EARTH)
    assert v.verdict == "retained"
    assert v.critical_speed == pytest.approx(math.sqrt(9.8 * 6.371e6), rel=1e-12)
    assert v.critical_speed == pytest.approx(7.90e3, abs=10)
    assert extrusion_verdict(FAST).verdict == "extruded"
    tie = RotatingBody(4.0, 2.0, 1.0)  # V = sqrt(gR)
    assert extrusion_verdict(tie).verdict == "retained"


@given(st.floats(1e-3, 1e3))
def test_verdict_invariant_under_scaling(k):
    for body in (EARTH, FAST):
        assert extrusion_verdict(body.scaled(k)).verdict == extrusion_verdict(body).verdict
        assert extrusion_limit_ratio(body.scaled(k)) == pytest.approx(extrusion_limit_ratio(body), rel=1e-12)


def test_critical_speed_is_circular_orbit_speed():
    r, g = EARTH.radius, EARTH.g
    period = 2.0 * math.pi * r / math.sqrt(g * r)
    assert extrusion_verdict(EARTH).critical_speed == pytest.approx(OrbitSpec(r, period).speed, rel=1e-6)


@given(st.floats(1e-9, 1.0))
def test_rise_small_time_expansion(frac):
    t = frac * 1e-3 * EARTH.radius / EARTH.surface_speed
    approx = EARTH.surface_speed**2 * t * t / (2.0 * EARTH.radius)
    ratio = tangential_rise(t, EARTH) / approx
    assert 1.0 - 1e-15 <= ratio <= 1.0 + 1e-6


def test_catch_up_has_no_interior_sign_change():
    # fall already exceeds the rise just after release, so there is no root to bracket in (0, 1]
    assert catch_up_difference(1e-6, EARTH) > 0 and catch_up_difference(1.0, EARTH) > 0
    with pytest.raises(BracketError):
        find_root(lambda t: catch_up_difference(t, EARTH), (1e-6, 1.0))
    assert catch_up_difference(1.0, FAST) < 0


def test_rise_domain():
    with pytest.raises(DomainError):
        tangential_rise(-1.0, EARTH)


# -------------------------------------------------------------- path of fall


def test_tower_path_matches_spiral_not_semicircle():
    spec = FallPathSpec.tower()
    p = path_of_fall(spec)
    assert p.spiral_dev < 1e-9 * spec.r0
    assert p.semicircle_dev > 0.01 * spec.r0


def test_semicircle_gap_at_45_degrees():
    spec = FallPathSpec.tower()
    theta = math.pi / 4
    spiral = spec.r0 - spec.spiral_coefficient * theta**2
    assert abs(spiral - spec.r0 * math.cos(theta)) > 0.01 * spec.r0


@given(st.floats(1e3, 1e7), st.floats(1e-5, 1e-2), st.floats(0.1, 30.0))
def test_path_reaches_centre_at_closed_form_angle(r0, omega, g):
    spec = FallPathSpec(r0, omega, g)
    p = path_of_fall(spec, theta_max=1.2 * spec.theta_at_center, samples=256)
    assert p.truncated and p.r[-1] <= 0.0 < p.r[-2]
    # the quadratic through the last three samples brackets the crossing exactly
    quadratic = np.polynomial.Polynomial.fit(p.theta[-3:], p.r[-3:], 2)
    root = find_root(lambda x: float(quadratic(x)), (float(p.theta[-2]), float(p.theta[-1])))
    assert root == pytest.approx(spec.theta_at_center, abs=1e-6)


def test_weak_gravity_keeps_circle():
    spec = FallPathSpec(1.0e6, 1e-3, 1e-12)
    p = path_of_fall(spec, theta_max=math.pi)
    assert np.max(np.abs(p.r - spec.r0)) < 1e-6 * spec.r0
