"""Cycloid quadrature, frictionless descent along straight, circular and
cycloidal curves, and the hanging chain compared with a parabola of equal
arc length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import DomainError, GeometryError, NoSagError
from .kernels import Tolerance, find_root, quad

_QUAD_TOL = Tolerance(1e-13, 1e-12)
_ROOT_TOL = Tolerance(1e-15, 1e-14)


# ---------------------------------------------------------------- cycloid area


@dataclass(frozen=True)
class CycloidSpec:
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise DomainError("generating-circle radius must be positive")


@dataclass(frozen=True)
class CycloidArea:
    numeric: float
    exact: float
    ratio_to_circle: float
    verdict_not_exactly_three: str  # verdict on "close to but not exactly three circles"


def cycloid_area(spec: CycloidSpec) -> CycloidArea:
    r = spec.r
    numeric = quad(lambda th: r * r * (1.0 - math.cos(th)) ** 2, (0.0, 2.0 * math.pi), _QUAD_TOL)
    exact = 3.0 * math.pi * r * r
    ratio = numeric / (math.pi * r * r)
    verdict = "REFUTED" if abs(ratio - 3.0) <= 1e-9 * 3.0 else "CONFIRMED"
    return CycloidArea(numeric, exact, ratio, verdict)


# ---------------------------------------------------------------- descent curves


@dataclass(frozen=True)
class DescentCurve:
    """Curve from ``start`` down to ``end``.

    ``circular-arc`` members are fixed by their sagitta, measured from the
    chord toward the lower side. ``cycloid`` is the inverted cycloid with its
    cusp at ``start`` passing through ``end``.
    """

    kind: Literal["straight", "circular-arc", "cycloid"]
    start: tuple[float, float]
    end: tuple[float, float]
    sagitta: float | None = None

    def __post_init__(self):
        if self.kind not in ("straight", "circular-arc", "cycloid"):
            raise DomainError(f"unknown curve kind {self.kind!r}")
        if not self.start[1] > self.end[1]:
            raise DomainError("start must lie strictly above end")
        if self.kind == "circular-arc" and not (self.sagitta is not None and self.sagitta > 0):
            raise DomainError("circular-arc curves need a positive sagitta")

    @property
    def run(self) -> float:
        return abs(self.end[0] - self.start[0])

    @property
    def depth(self) -> float:
        return self.start[1] - self.end[1]


@dataclass(frozen=True)
class _Parametrized:
    """Curve in the local frame: start at the origin, moving toward +x, y down."""

    span: float
    point: Callable[[float], tuple[float, float]]
    speed: Callable[[float], float]  # |d point / dp|
    drop: Callable[[float], float]


def _stable_theta_minus_sin(th: float) -> float:
    if th < 1e-2:
        t2 = th * th
        return th * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0))
    return th - math.sin(th)


def cycloid_through(run: float, depth: float) -> tuple[float, float]:
    """Generating radius and final roll angle of the cusp-started cycloid
    through ``(run, -depth)``. Solves depth/run = (1-cos t)/(t - sin t)."""
    if not (run > 0 and depth > 0):
        raise DomainError("cycloid endpoint needs positive run and depth")
    target = depth / run

    def shape(th):
        return 2.0 * math.sin(0.5 * th) ** 2 / _stable_theta_minus_sin(th) - target

    lo = min(1.5 / target, 1.0)
    theta_f = find_root(shape, (lo, 2.0 * math.pi), _ROOT_TOL)
    r = depth / (2.0 * math.sin(0.5 * theta_f) ** 2)
    return r, theta_f


def _cycloid_param(r: float, theta_f: float, release: float = 0.0) -> _Parametrized:
    """Parameter q is the roll angle past ``release``."""

    def point(q):
        th = release + q
        return (r * (th - math.sin(th)), -r * (1.0 - math.cos(th)))

    def speed(q):
        return 2.0 * r * abs(math.sin(0.5 * (release + q)))

    def drop(q):
        # r (cos(release) - cos(release + q)), factored to avoid cancellation
        return 2.0 * r * math.sin(release + 0.5 * q) * math.sin(0.5 * q)

    return _Parametrized(theta_f - release, point, speed, drop)


def _arc_geometry(run: float, depth: float, sagitta: float):
    chord = math.hypot(run, depth)
    radius = (0.25 * chord * chord + sagitta * sagitta) / (2.0 * sagitta)
    half = math.asin(min(1.0, 0.5 * chord / radius))
    sweep = 2.0 * half if sagitta <= radius else 2.0 * math.pi - 2.0 * half
    dx, dy = run / chord, -depth / chord
    nx, ny = dy, -dx  # normal toward the lower side of the chord
    mx, my = 0.5 * run, -0.5 * depth
    cx, cy = mx - nx * (radius - sagitta), my - ny * (radius - sagitta)
    a0 = math.atan2(-cy, -cx)
    sag_x, sag_y = mx + nx * sagitta, my + ny * sagitta
    mid_plus = (cx + radius * math.cos(a0 + 0.5 * sweep), cy + radius * math.sin(a0 + 0.5 * sweep))
    sign = 1.0 if math.hypot(mid_plus[0] - sag_x, mid_plus[1] - sag_y) < 1e-6 * chord else -1.0
    return radius, sweep, cx, cy, a0, sign


def _arc_param(run: float, depth: float, sagitta: float) -> _Parametrized:
    radius, sweep, cx, cy, a0, sign = _arc_geometry(run, depth, sagitta)

    def point(phi):
        a = a0 + sign * phi
        return (cx + radius * math.cos(a), cy + radius * math.sin(a))

    def drop(phi):
        # R (sin a0 - sin(a0 + sign phi)), factored
        return -2.0 * radius * math.cos(a0 + 0.5 * sign * phi) * math.sin(0.5 * sign * phi)

    param = _Parametrized(sweep, point, lambda phi: radius, drop)
    for k in list(range(1, 41)) + [None]:
        probes = [sweep * 2.0 ** (-k)] if k is not None else list(np.linspace(0.0, sweep, 513)[1:])
        if any(drop(float(p)) <= 0.0 for p in probes):
            raise GeometryError(
                f"circular arc with sagitta {sagitta!r} rises to the release height and never reaches the end"
            )
    return param


def _straight_param(run: float, depth: float) -> _Parametrized:
    length = math.hypot(run, depth)
    return _Parametrized(length, lambda s: (s * run / length, -s * depth / length), lambda s: 1.0, lambda s: s * depth / length)


def _param(curve: DescentCurve) -> _Parametrized:
    run, depth = curve.run, curve.depth
    if curve.kind == "straight" or run == 0.0:
        return _straight_param(run, depth)
    if curve.kind == "cycloid":
        return _cycloid_param(*cycloid_through(run, depth))
    return _arc_param(run, depth, curve.sagitta)


def _descent(p: _Parametrized, g: float, upto: float | None = None) -> float:
    two_g = 2.0 * g
    hi = p.span if upto is None else upto
    return quad(lambda q: p.speed(q) / math.sqrt(two_g * p.drop(q)), (0.0, hi), _QUAD_TOL)


def descent_time(curve: DescentCurve, c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Frictionless time from rest at ``start`` to ``end``: the line integral
    of ds / sqrt(2 g drop), evaluated by quadrature over the curve's natural
    parameter."""
    return _descent(_param(curve), c.g)


def cycloid_time_to_bottom(r: float, release: float, c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Time to the lowest point of an inverted cycloid from rest at roll angle
    ``release`` in [0, pi)."""
    if not 0.0 <= release < math.pi:
        raise DomainError("release angle must lie in [0, pi)")
    return _descent(_cycloid_param(r, math.pi, release), c.g)


def sample_descent(curve: DescentCurve, c: PhysicalConstants = DEFAULT_CONSTANTS, points: int = 33) -> list[tuple[float, float, float]]:
    """``(x, y, t)`` along the curve in the caller's frame, ``t`` the arrival time."""
    p = _param(curve)
    direction = 1.0 if curve.end[0] >= curve.start[0] else -1.0
    x0, y0 = curve.start
    rows = []
    for i in range(points):
        q = p.span * i / (points - 1)
        lx, ly = p.point(q)
        t = _descent(p, c.g, q) if i else 0.0
        rows.append((x0 + direction * lx, y0 + ly, t))
    return rows


def max_sagitta(start: tuple[float, float], end: tuple[float, float]) -> float:
    """Sagitta at which the arc leaves the start horizontally (infinite time)."""
    run, depth = abs(end[0] - start[0]), start[1] - end[1]
    chord = math.hypot(run, depth)
    slope = math.atan2(depth, run)
    return 0.5 * chord * math.tan(0.5 * (math.pi - slope))


@dataclass(frozen=True)
class BrachistochroneReport:
    T_cycloid: float
    T_best_circular_arc: float
    T_straight: float
    best_sagitta: float
    cycloid_radius: float
    cycloid_angle: float

    @property
    def ordered(self) -> bool:
        return self.T_cycloid < self.T_best_circular_arc < self.T_straight

    @property
    def margin_cycloid_vs_arc(self) -> float:
        return self.T_best_circular_arc / self.T_cycloid - 1.0

    @property
    def margin_arc_vs_straight(self) -> float:
        return self.T_straight / self.T_best_circular_arc - 1.0


def best_circular_arc(start, end, c: PhysicalConstants = DEFAULT_CONSTANTS, grid: int = 24) -> tuple[float, float]:
    """(sagitta, time) of the fastest circular arc through both endpoints.

    A coarse scan brackets the minimum; the stationary point is then located
    by root finding on a central-difference derivative.
    """
    s_max = max_sagitta(start, end)

    def time_for(s):
        try:
            return descent_time(DescentCurve("circular-arc", start, end, s), c)
        except GeometryError:
            return math.inf

    sags = [s_max * k / (grid + 1) for k in range(1, grid + 1)]
    times = [time_for(s) for s in sags]
    k = int(np.argmin(times))
    if k == 0:
        # steep chords put the optimum below the first grid point; halve down to it
        s, t = sags[0], times[0]
        while s > 1e-12 * s_max:
            t_half = time_for(0.5 * s)
            if t_half >= t:
                break
            s, t = 0.5 * s, t_half
        sags, times, k = [s], [t], 0
        lo, hi = 0.5 * s, 2.0 * s
    else:
        lo = sags[k - 1]
        hi = sags[k + 1] if k + 1 < len(sags) else 0.5 * (sags[k] + s_max)
    h = 1e-6 * lo

    def slope(s):
        return (time_for(s + h) - time_for(s - h)) / (2.0 * h)

    try:
        s_best = find_root(slope, (lo, hi), Tolerance(1e-9 * s_max, 0.0))
    except Exception:
        s_best = sags[k]
    t_best = time_for(s_best)
    if t_best > times[k]:
        s_best, t_best = sags[k], times[k]
    return s_best, t_best


def brachistochrone_compare(start, end, c: PhysicalConstants = DEFAULT_CONSTANTS) -> BrachistochroneReport:
    run, depth = abs(end[0] - start[0]), start[1] - end[1]
    t_straight = descent_time(DescentCurve("straight", start, end), c)
    if run == 0.0:
        return BrachistochroneReport(t_straight, t_straight, t_straight, 0.0, 0.0, 0.0)
    r, theta_f = cycloid_through(run, depth)
    t_cyc = descent_time(DescentCurve("cycloid", start, end), c)
    s_best, t_arc = best_circular_arc(start, end, c)
    return BrachistochroneReport(t_cyc, t_arc, t_straight, s_best, r, theta_f)


# ---------------------------------------------------------------- hanging chain


@dataclass(frozen=True)
class HangingChain:
    span: float
    arc_length: float

    def __post_init__(self):
        if not self.span > 0:
            raise DomainError("span must be positive")
        if not self.arc_length > self.span:
            raise NoSagError("arc length must exceed the span for the chain to sag")


@dataclass(frozen=True)
class ChainComparison:
    catenary_a: float
    parabola_k: float
    sag: float
    max_deviation: float
    deviation_over_sag: float
    x: np.ndarray
    y_catenary: np.ndarray
    y_parabola: np.ndarray

    def rows(self):
        return [(float(a), float(b), float(c)) for a, b, c in zip(self.x, self.y_catenary, self.y_parabola)]


def _sinhc_minus_one(z: float) -> float:
    if z < 1e-2:
        z2 = z * z
        return z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0))
    return math.sinh(z) / z - 1.0


def _parabola_excess(u: float) -> float:
    """Arc length over span, minus one, for y = k x^2 with u = k * span."""
    if u < 1e-2:
        u2 = u * u
        return u2 / 6.0 - u2 * u2 / 40.0 + u2 * u2 * u2 / 112.0
    return (u * math.sqrt(1.0 + u * u) + math.asinh(u)) / (2.0 * u) - 1.0


def _grow_bracket(fn, target):
    hi = 1.0
    while fn(hi) < target:
        hi *= 2.0
    return hi


def catenary_parameter(chain: HangingChain) -> float:
    """a in y = a cosh(x/a) such that the arc over the span has the given length."""
    excess = (chain.arc_length - chain.span) / chain.span
    hi = _grow_bracket(_sinhc_minus_one, excess)
    z = find_root(lambda z: _sinhc_minus_one(z) - excess, (0.0, hi), _ROOT_TOL)
    return chain.span / (2.0 * z)


def parabola_coefficient(chain: HangingChain) -> float:
    """k in y = k x^2 with the same span and arc length as the chain."""
    excess = (chain.arc_length - chain.span) / chain.span
    hi = _grow_bracket(_parabola_excess, excess)
    u = find_root(lambda u: _parabola_excess(u) - excess, (0.0, hi), _ROOT_TOL)
    return u / chain.span


def catenary_vs_parabola(chain: HangingChain, samples: int = 1024) -> ChainComparison:
    a = catenary_parameter(chain)
    k = parabola_coefficient(chain)
    half = 0.5 * chain.span
    z = half / a
    x = np.linspace(-half, half, samples)
    # a (cosh(x/a) - cosh(z)) written as a product of sinh terms
    y_cat = 2.0 * a * np.sinh(0.5 * (x / a + z)) * np.sinh(0.5 * (x / a - z))
    y_par = k * (x - half) * (x + half)
    sag = 2.0 * a * math.sinh(0.5 * z) ** 2
    dev = float(np.max(np.abs(y_cat - y_par)))
    return ChainComparison(a, k, sag, dev, dev / sag, x, y_cat, y_par)


def catenary_arc_length(a: float, span: float) -> float:
    """Arc length of a cosh(x/a) over the span, by quadrature of sqrt(1 + y'^2)."""
    half = 0.5 * span
    return quad(lambda x: math.sqrt(1.0 + math.sinh(x / a) ** 2), (-half, half), Tolerance(1e-14, 1e-13), endpoint_transform=False)


__all__ = [
    "CycloidSpec",
    "CycloidArea",
    "cycloid_area",
    "DescentCurve",
    "cycloid_through",
    "descent_time",
    "cycloid_time_to_bottom",
    "sample_descent",
    "max_sagitta",
    "best_circular_arc",
    "BrachistochroneReport",
    "brachistochrone_compare",
    "HangingChain",
    "ChainComparison",
    "catenary_parameter",
    "parabola_coefficient",
    "catenary_vs_parabola",
    "catenary_arc_length",
]
