import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from histmech.ancients import (
    BracketingProblem,
    DichotomyObservation,
    angle_for_ratio,
    brute_force,
    diameter_ratio_from_volume,
    dichotomy_ci,
    schroeder_count,
    schroeder_table,
    sun_moon_distance_ratio,
    volume_ratio_from_diameter,
)
from histmech.errors import DomainError


def ratio_deg(deg):
    return sun_moon_distance_ratio(DichotomyObservation(math.radians(deg)))


def test_secant_examples():
    assert ratio_deg(87.0) == pytest.approx(19.107, abs=1e-3)
    assert ratio_deg(87.0) == pytest.approx(1 / math.cos(math.radians(87)), rel=1e-15)
    assert ratio_deg(60.0) == pytest.approx(2.0, rel=1e-12)
    assert ratio_deg(89.853) == pytest.approx(389.8, abs=0.5)
    assert ratio_deg(89.853) / ratio_deg(87.0) == pytest.approx(20.0, abs=1.0)


@given(st.floats(0.01, 1.55), st.floats(1e-6, 0.01))
def test_secant_increasing(a, da):
    assert sun_moon_distance_ratio(DichotomyObservation(a + da)) > sun_moon_distance_ratio(DichotomyObservation(a))


def test_angle_for_ratio_inverts():
    assert angle_for_ratio(ratio_deg(87.0)) == pytest.approx(math.radians(87.0), rel=1e-12)


def test_ci_examples():
    ci = dichotomy_ci()
    assert ci.n == 500 and ci.sigma_deg == 6.0
    assert ci.half_width_deg == pytest.approx(0.526, abs=0.005)
    assert ci.bias_deg == pytest.approx(2.853, abs=1e-9)
    assert ci.detectable
    few = dichotomy_ci(years=1.0)
    assert few.half_width_deg == pytest.approx(1.96 * 6 / 5, abs=0.005)
    assert few.detectable


@given(st.integers(1, 10_000))
def test_ci_halves_on_quadrupling(n):
    a = dichotomy_ci(observations_per_year=n, years=1.0)
    b = dichotomy_ci(observations_per_year=4 * n, years=1.0)
    assert b.half_width_deg == a.half_width_deg / 2


def test_volume_examples():
    assert diameter_ratio_from_volume(300.0) == pytest.approx(6.694, abs=1e-3)
    assert diameter_ratio_from_volume(20.0) == pytest.approx(2.714, abs=1e-3)
    assert volume_ratio_from_diameter(1.0) == 1.0


@given(st.floats(1e-3, 1e6))
def test_volume_inverse(v):
    assert volume_ratio_from_diameter(diameter_ratio_from_volume(v)) == pytest.approx(v, rel=1e-12)


def narayana_schroeder(n):
    """s(n) = sum_k N(m, k) 2^(k-1) with m = n - 1 and Narayana numbers N(m, k) = C(m, k) C(m, k-1) / m."""
    m = n - 1
    if m == 0:
        return 1
    return sum(math.comb(m, k) * math.comb(m, k - 1) // m * 2 ** (k - 1) for k in range(1, m + 1))


def test_schroeder_examples():
    counts = [schroeder_count(BracketingProblem(n)) for n in range(1, 7)]
    assert counts == [1, 1, 3, 11, 45, 197]
    assert schroeder_count(BracketingProblem(10)) == 103049


def test_schroeder_against_closed_sum():
    for n in range(1, 13):
        assert schroeder_count(BracketingProblem(n)) == narayana_schroeder(n)


def test_brute_force_agrees():
    for n in range(1, 7):
        assert brute_force(BracketingProblem(n)) == schroeder_count(BracketingProblem(n))


def test_table_and_domain():
    assert schroeder_table(4) == [(1, 1), (2, 1), (3, 3), (4, 11)]
    with pytest.raises(DomainError):
        BracketingProblem(13)
    with pytest.raises(DomainError):
        brute_force(BracketingProblem(7))
