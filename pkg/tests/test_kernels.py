import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from histmech.errors import BracketError, ConvergenceError, DomainError
from histmech.kernels import (
    Interval,
    Tolerance,
    find_root,
    integrate_ode,
    mean_ci,
    normal_quantile,
    quad,
)


def test_tolerance_rejects_zero_and_negative():
    with pytest.raises(DomainError):
        Tolerance(0.0, 0.0)
    with pytest.raises(DomainError):
        Tolerance(-1.0, 0.1)
    assert Tolerance(1e-3, 0.1).bound(1.0) == 0.1
    assert Tolerance(1e-3, 0.1).accepts(1.05, 1.0)


def test_interval_order():
    with pytest.raises(DomainError):
        Interval(1.0, 0.0)
    assert Interval(2.0, 2.0).width == 0.0


def test_quad_sine():
    assert quad(math.sin, (0.0, math.pi)) == pytest.approx(2.0, abs=1e-10)


def test_quad_cycloid_integrand():
    # 1 - 2 cos t + cos^2 t integrates to 2 pi + pi over a full period
    val = quad(lambda t: (1.0 - math.cos(t)) ** 2, (0.0, 2.0 * math.pi), Tolerance(1e-13, 1e-12))
    assert val == pytest.approx(3.0 * math.pi, rel=1e-9)


def test_quad_endpoint_singularity():
    assert quad(lambda x: 1.0 / math.sqrt(x), (0.0, 1.0)) == pytest.approx(2.0, abs=1e-8)


def test_quad_smooth_without_transform():
    assert quad(math.exp, (0.0, 1.0), endpoint_transform=False) == pytest.approx(math.e - 1.0, rel=1e-10)


def test_quad_reports_nonconvergence():
    with pytest.raises(ConvergenceError) as info:
        quad(lambda x: math.sin(1.0 / x) / x, (1e-9, 1.0), Tolerance(1e-14, 1e-14))
    assert math.isfinite(info.value.estimate)


def test_quad_degenerate_interval():
    assert quad(math.exp, (1.0, 1.0)) == 0.0


@given(
    st.lists(st.floats(-5, 5), min_size=1, max_size=5),
    st.lists(st.floats(-5, 5), min_size=1, max_size=5),
    st.floats(-3, 3),
    st.floats(-3, 3),
)
def test_quad_is_linear(p, q, a, b):
    tol = Tolerance(1e-10, 1e-10)
    f = np.polynomial.Polynomial(p)
    g = np.polynomial.Polynomial(q)
    iv = (-1.0, 2.0)
    combined = quad(lambda x: a * f(x) + b * g(x), iv, tol)
    separate = a * quad(f, iv, tol) + b * quad(g, iv, tol)
    scale = abs(a) * quad(lambda x: abs(f(x)), iv, tol) + abs(b) * quad(lambda x: abs(g(x)), iv, tol)
    assert abs(combined - separate) <= 2 * tol.bound(scale) + 1e-12


def test_ode_exponential():
    traj = integrate_ode([1.0], lambda t, y: [y[0]], (0.0, 1.0))
    assert traj.final[0] == pytest.approx(math.e, abs=1e-8)


def test_ode_free_fall():
    traj = integrate_ode([0.0, 0.0], lambda t, y: [y[1], -9.8], (0.0, 1.0))
    assert traj.final[0] == pytest.approx(-4.9, abs=1e-12)


def test_ode_pendulum_conserves_energy():
    g, L = 9.8, 1.0
    tol = Tolerance(1e-10, 1e-10)
    traj = integrate_ode([math.pi / 2, 0.0], lambda t, y: [y[1], -g / L * math.sin(y[0])], (0.0, 3.0), tol)
    energy = 0.5 * L**2 * traj.y[:, 1] ** 2 - g * L * np.cos(traj.y[:, 0])
    assert np.max(np.abs(energy - energy[0])) <= tol.bound(g * L) * 3.0


def test_find_root_sqrt2():
    assert find_root(lambda x: x * x - 2.0, (1.0, 2.0), Tolerance(1e-12, 0.0)) == pytest.approx(math.sqrt(2.0), abs=1e-9)


def test_find_root_requires_sign_change():
    with pytest.raises(BracketError):
        find_root(lambda x: x * x + 1.0, (0.0, 1.0))


@given(st.floats(-50, 50), st.floats(0.01, 20))
def test_find_root_stays_in_bracket(shift, width):
    lo, hi = shift - width, shift + 2 * width
    x = find_root(lambda x: math.atan(x - shift), (lo, hi))
    assert lo <= x <= hi


def test_normal_quantile_known_values():
    assert normal_quantile(0.975) == pytest.approx(1.959963985, abs=1e-8)
    assert normal_quantile(0.5) == pytest.approx(0.0, abs=1e-12)
    assert normal_quantile(0.01) == pytest.approx(-2.326347874, abs=1e-8)


def test_mean_ci_examples():
    assert mean_ci(6.0, 500, 0.95) == pytest.approx(0.526, abs=0.005)
    assert mean_ci(6.0, 1, 0.95) == pytest.approx(11.76, abs=0.005)
    assert mean_ci(6.0, 2000, 0.95) == pytest.approx(0.263, abs=0.001)


@given(st.floats(0.01, 100), st.integers(1, 10**6), st.floats(0.5, 0.999))
def test_mean_ci_halves_on_quadrupling(sigma, n, conf):
    assert mean_ci(sigma, 4 * n, conf) == mean_ci(sigma, n, conf) / 2


def test_mean_ci_domain():
    with pytest.raises(DomainError):
        mean_ci(1.0, 0)
    with pytest.raises(DomainError):
        mean_ci(1.0, 5, 1.0)
