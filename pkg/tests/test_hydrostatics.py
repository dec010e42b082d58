import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from histmech.errors import DomainError, GroundedError, NonphysicalError
from histmech.hydrostatics import (
    Container,
    FloatingPrism,
    Paraboloid,
    _submerged,
    critical_height,
    energy_scan_stable,
    float_equilibrium,
    minimum_water,
    mixture_density,
    paraboloid_upright_stability,
    stability_grid,
    weighings,
    wreath_density,
)

G = 9.8


# -------------------------------------------------------------- prism


def test_level_rise_example():
    eq = float_equilibrium(FloatingPrism(0.01, 0.2, 0.5), Container(0.1, 0.05))
    assert eq.new_level - eq.initial_level == pytest.approx(0.01, rel=1e-12)
    assert eq.draft == pytest.approx(0.1, rel=1e-15)


def test_open_ocean_limit():
    body = FloatingPrism(0.01, 0.2, 0.5)
    eq = float_equilibrium(body, Container(1e6, 1e6))
    assert eq.displaced_below_initial_level == pytest.approx(eq.submerged_volume, rel=1e-7)


def test_wine_cooler():
    body = FloatingPrism(0.01, 0.2, 0.5)
    cont = Container(0.0105, 0.0)
    eq = float_equilibrium(body, Container(0.0105, minimum_water(body, cont)))
    assert eq.water_mass < eq.body_mass
    assert eq.water_mass / eq.body_mass == pytest.approx(0.05, rel=1e-9)


def test_too_little_water_grounds():
    body = FloatingPrism(0.01, 0.2, 0.5)
    with pytest.raises(GroundedError) as info:
        float_equilibrium(body, Container(0.02, 1e-6))
    assert info.value.required_volume == pytest.approx(0.001, rel=1e-12)


prisms = st.builds(
    lambda a, h, s, wide, extra: (FloatingPrism(a, h, s), wide, extra),
    st.floats(1e-4, 1.0), st.floats(0.01, 5.0), st.floats(0.01, 0.99), st.floats(1.001, 100.0), st.floats(0.0, 10.0),
)


@given(prisms)
def test_bookkeeping_closes(case):
    body, wide, extra = case
    cont0 = Container(body.cross_section * wide, 0.0)
    water = minimum_water(body, cont0) * (1.0 + extra)
    eq = float_equilibrium(body, Container(cont0.cross_section, water))
    assert eq.weight == pytest.approx(1000.0 * G * eq.submerged_volume, rel=1e-12)
    ratio = eq.displaced_below_initial_level / eq.submerged_volume
    assert ratio == pytest.approx(1.0 - 1.0 / wide, rel=1e-12)


# -------------------------------------------------------------- wreath


def test_gold_round_trip():
    air, water = weighings(19300.0, 1.0)
    assert water / air == pytest.approx(1 - 1000 / 19300, rel=1e-15)
    res = wreath_density(air, water)
    assert res.density == pytest.approx(19300.0, rel=1e-12)
    assert res.classification == "consistent-with gold"


def test_half_and_half_is_alloy():
    rho = mixture_density({"gold": 0.5, "silver": 0.5})
    assert rho == pytest.approx(1 / (0.5 / 19300 + 0.5 / 10500), rel=1e-15)
    assert rho == pytest.approx(13600, rel=0.01)
    assert wreath_density(*weighings(rho, 1.0)).classification == "alloy"


def test_half_weight_in_water():
    assert wreath_density(10.0, 5.0).density == pytest.approx(2000.0, rel=1e-15)


@given(st.floats(1001.0, 30000.0), st.floats(1e-3, 1e3))
def test_density_left_inverse(rho, mass):
    assert wreath_density(*weighings(rho, mass)).density == pytest.approx(rho, rel=1e-12)


def test_nonphysical_weighings():
    with pytest.raises(NonphysicalError):
        wreath_density(1.0, 2.0)
    with pytest.raises(NonphysicalError):
        wreath_density(1.0, 0.0)


# -------------------------------------------------------------- paraboloid


def test_critical_height_example():
    assert critical_height(1.0, 0.25) == pytest.approx(6.0, rel=1e-15)
    assert paraboloid_upright_stability(Paraboloid(1.0, 5.0, 0.25)).stable
    assert not paraboloid_upright_stability(Paraboloid(1.0, 7.0, 0.25)).stable
    assert energy_scan_stable(Paraboloid(1.0, 5.0, 0.25))
    assert not energy_scan_stable(Paraboloid(1.0, 7.0, 0.25))


def test_neutral_buoyancy_limit():
    assert critical_height(1.0, 1.0 - 1e-12) > 1e12


def test_flat_body_always_stable():
    for s in (0.01, 0.5, 0.99):
        r = paraboloid_upright_stability(Paraboloid(1.0, 1e-3, s))
        assert r.stable and r.metacentric_height == pytest.approx(2.0, rel=1e-2)


def test_grid_agreement():
    rows = stability_grid()
    assert len(rows) == 100
    assert all(r[3] == r[4] for r in rows)


def test_submerged_volume_upright_closed_form():
    p = Paraboloid(1.0, 4.0, 0.3)
    d = p.draft
    vol, mx, mz = _submerged(p, d, 0.0)
    assert vol == pytest.approx(2 * math.pi * d * d, rel=1e-12)
    assert mx == pytest.approx(0.0, abs=1e-12)
    assert mz / vol == pytest.approx(2 * d / 3, rel=1e-12)


def test_submerged_tilted_monte_carlo():
    p = Paraboloid(1.0, 3.0, 0.5)
    c, m = 1.5, 0.3
    rng = np.random.default_rng(7)
    R = math.sqrt(4 * p.focal * p.height)
    n = 400_000
    pts = rng.uniform([-R, -R, 0.0], [R, R, p.height], size=(n, 3))
    inside = (pts[:, 2] >= (pts[:, 0] ** 2 + pts[:, 1] ** 2) / 4.0) & (pts[:, 2] <= c + m * pts[:, 0])
    box = (2 * R) ** 2 * p.height
    vol_mc = box * inside.mean()
    vol, mx, _ = _submerged(p, c, m)
    assert vol == pytest.approx(vol_mc, rel=0.01)
    assert mx / vol == pytest.approx(pts[inside, 0].mean(), abs=0.02)


@settings(max_examples=10)
@given(st.floats(0.5, 20.0), st.floats(0.05, 0.95))
def test_gm_and_energy_agree_off_grid(h, s):
    p = Paraboloid(1.0, h, s)
    gm = paraboloid_upright_stability(p).metacentric_height
    if abs(gm) > 1e-3:
        assert energy_scan_stable(p) == (gm > 0)


def test_paraboloid_validation():
    with pytest.raises(DomainError):
        Paraboloid(1.0, 1.0, 1.0)
