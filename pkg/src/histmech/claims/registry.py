"""The claim registry: every historical assertion, how it is evaluated, and
the verdict the reconstruction is expected to reach."""

from __future__ import annotations

import dataclasses
import difflib
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .. import ancients, celestial, curves, hydrostatics, kinematics, rotation, venus
from ..constants import ARCMIN, ARCSEC, DAY, HOUR, PhysicalConstants
from ..errors import HistmechError, NoDataError, NotFoundError
from ..kernels import Tolerance
from .config import RunConfig
from .records import Check, ClaimRecord, Computed, HistoricalAssertion, Verdict, numeric_verdict


@dataclass(frozen=True)
class Context:
    constants: PhysicalConstants
    planets: dict[str, tuple[float, float]]
    materials: dict[str, float]

    @classmethod
    def from_config(cls, cfg: RunConfig) -> "Context":
        return cls(cfg.constants, cfg.planets, cfg.materials)


@dataclass(frozen=True)
class Evaluation:
    computed: Computed
    verdict: Verdict | None = None  # None: derive from the numeric comparison
    checks: tuple[Check, ...] = ()
    details: tuple[tuple[str, Any], ...] = ()


@dataclass(frozen=True)
class Series:
    columns: tuple[str, ...]
    rows: list[tuple]


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    title: str
    section_ref: str
    assertion: HistoricalAssertion
    citations: tuple[str, ...]
    expected: Verdict
    evaluate: Callable[[Context, Tolerance | None], Evaluation]
    tolerance: Tolerance | None = None
    series: Callable[[Context], Series] | None = None
    blocked_by: str | None = None

    def record(self) -> ClaimRecord:
        return ClaimRecord(
            id=self.id,
            title=self.title,
            section_ref=self.section_ref,
            historical_assertion=self.assertion,
            citations=self.citations,
            expected_verdict=self.expected,
            tolerance=self.tolerance,
        )


def _approx(name, value, target, abs_=0.0, rel=0.0) -> Check:
    tol = Tolerance(abs_, rel) if abs_ or rel else None
    return Check(name, float(value), "approx", float(target), tol)


def _gt(name, value, target) -> Check:
    return Check(name, float(value), "gt", float(target))


def _lt(name, value, target) -> Check:
    return Check(name, float(value), "lt", float(target))


def _true(name, flag) -> Check:
    return Check(name, 1.0 if flag else 0.0, "true")


# ---------------------------------------------------------------- mechanics


def _cycloid_area(ctx, tol):
    res = curves.cycloid_area(curves.CycloidSpec(1.0))
    r2 = curves.cycloid_area(curves.CycloidSpec(2.0))
    return Evaluation(
        Computed(res.ratio_to_circle, "generating-circle areas", "adaptive quadrature of r^2 (1 - cos t)^2 over one arch"),
        res.verdict_not_exactly_three,
        (
            _approx("area(r=1) = 3 pi", res.numeric, 3.0 * math.pi, rel=1e-9),
            _approx("area(r=2) = 12 pi", r2.numeric, 12.0 * math.pi, rel=1e-9),
        ),
        (("area_r1", res.numeric),),
    )


def _cycloid_series(ctx):
    th = np.linspace(0.0, 2.0 * math.pi, 65)
    return Series(("theta", "x", "y"), [(float(t), float(t - math.sin(t)), float(1.0 - math.cos(t))) for t in th])


def _fall_vs_arc(c):
    arc = kinematics.ramp_profile(kinematics.RampPath.circular_arc(1.0), c)
    drop_time = math.sqrt(2.0 * 1.0 / c.g)
    fall = kinematics.MotionProfile.linear(c.g, drop_time)
    return kinematics.matching_audit(fall, arc, kinematics.Matching("equal-vertical-drop"))


def _fall_vs_incline(c):
    h = 1.0
    fall = kinematics.MotionProfile.linear(c.g, math.sqrt(2.0 * h / c.g))
    incline = kinematics.ramp_profile(kinematics.RampPath.straight(2.0 * h, h), c)
    return kinematics.matching_audit(fall, incline, kinematics.Matching("equal-vertical-drop"))


def _triangle_rectangle():
    tri = kinematics.MotionProfile.linear(2.0, 3.0)
    rect = kinematics.MotionProfile.uniform(3.0, 3.0)
    return kinematics.matching_audit(tri, rect, kinematics.Matching("equal-time-fraction"))


def _matching(ctx, tol):
    c = ctx.constants
    arc, inc, tr = _fall_vs_arc(c), _fall_vs_incline(c), _triangle_rectangle()
    return Evaluation(
        Computed(arc.mismatch, "relative", "matching audit of free fall against a quarter-circle ramp of equal drop"),
        "REFUTED" if arc.speeds_matched and not arc.galilean_inference_holds and arc.mismatch > 0.01 else "CONFIRMED",
        (
            _true("arc ramp: speeds matched", arc.speeds_matched),
            _gt("arc ramp: ratio mismatch", arc.mismatch, 0.01),
            _true("triangle vs rectangle: inference holds", tr.galilean_inference_holds),
            _true("incline L = 2h: inference holds", inc.galilean_inference_holds),
        ),
        (("arc_distance_ratio", arc.distance_ratio), ("arc_time_ratio", arc.time_ratio)),
    )


def _matching_series(ctx):
    c = ctx.constants
    rows = []
    for name, a in (("triangle-rectangle", _triangle_rectangle()), ("free-fall-incline", _fall_vs_incline(c)), ("free-fall-arc", _fall_vs_arc(c))):
        rows.append((name, a.speeds_matched, a.distance_ratio, a.time_ratio, a.mismatch, a.galilean_inference_holds))
    return Series(("case", "speeds_matched", "distance_ratio", "time_ratio", "mismatch", "inference_holds"), rows)


def _mean_speed(ctx, tol):
    g = ctx.constants.g
    lin = kinematics.mean_speed_distance(kinematics.MotionProfile.linear(g, 2.0))
    uni = kinematics.mean_speed_distance(kinematics.MotionProfile.uniform(g, 2.0))
    ts = np.linspace(0.0, 1.0, 1001)
    sq = kinematics.mean_speed_distance(kinematics.MotionProfile.sampled(ts, np.sqrt(ts)))
    rel = abs(lin - uni) / uni
    return Evaluation(
        Computed(lin, "m", "quadrature of v = g t over [0, 2 s]"),
        "CONFIRMED" if rel <= 1e-12 else "REFUTED",
        (
            _approx("linear distance = half-final-speed uniform distance", lin, uni, rel=1e-12),
            _approx("distance under v = sqrt(t) on [0, 1]", sq, 2.0 / 3.0, rel=1e-4),
        ),
        (("uniform_distance", uni),),
    )


def _mean_speed_series(ctx):
    g = ctx.constants.g
    return Series(("t", "v_accelerated", "v_mean"), [(float(t), g * float(t), g) for t in np.linspace(0.0, 2.0, 21)])


def _incline(ctx, tol):
    c = ctx.constants
    inc = kinematics.ramp_descent_time(kinematics.RampPath.straight(2.0, 1.0), c)
    vert = kinematics.ramp_descent_time(kinematics.RampPath.vertical(1.0), c)
    arc = kinematics.ramp_descent_time(kinematics.RampPath.circular_arc(1.0), c)
    chord = kinematics.ramp_descent_time(kinematics.RampPath.straight(math.sqrt(2.0), 1.0), c)
    return Evaluation(
        Computed(inc / vert, "ratio", "quadrature of ds / sqrt(2 g drop) along an incline (L = 2, h = 1) and its vertical"),
        None,
        (
            _approx("straight ramp L = 2, h = 1", inc, 2.0 * math.sqrt(2.0 / (c.g * 1.0)), rel=1e-9),
            _approx("vertical drop 4.9 m", kinematics.ramp_descent_time(kinematics.RampPath.vertical(4.9), c), 1.0, rel=1e-9),
            _lt("quarter arc faster than its chord", arc, chord),
            _true("incline audit: inference holds", _fall_vs_incline(c).galilean_inference_holds),
        ),
        (("t_incline", inc), ("t_vertical", vert), ("t_quarter_arc", arc), ("t_chord", chord)),
    )


def _incline_series(ctx):
    c = ctx.constants
    paths = (
        ("vertical", kinematics.RampPath.vertical(1.0)),
        ("incline-L2", kinematics.RampPath.straight(2.0, 1.0)),
        ("chord", kinematics.RampPath.straight(math.sqrt(2.0), 1.0)),
        ("quarter-arc", kinematics.RampPath.circular_arc(1.0)),
    )
    return Series(("path", "length", "drop", "time"), [(n, p.length, p.height, kinematics.ramp_descent_time(p, c)) for n, p in paths])


def _pendulum(ctx, tol):
    c = ctx.constants
    small = 2.0 * math.pi * math.sqrt(1.0 / c.g)
    t90 = kinematics.pendulum_period(1.0, math.pi / 2, c)
    oracle = kinematics.pendulum_period_elliptic(1.0, math.pi / 2, c)
    t20 = kinematics.pendulum_period(1.0, math.radians(20.0), c)
    return Evaluation(
        Computed(t90 / small, "ratio", "integrated quarter swing at 90 degrees over the small-angle period"),
        None,
        (
            _approx("T(90)/T(small)", t90 / small, 1.1803, abs_=1e-3),
            _approx("ODE period vs AGM elliptic oracle", t90, oracle, rel=1e-4),
            _approx("T(20)/T(small)", t20 / small, 1.0077, abs_=1e-4),
        ),
        (("period_90deg_s", t90), ("period_small_s", small)),
    )


def _pendulum_series(ctx):
    c = ctx.constants
    small = 2.0 * math.pi * math.sqrt(1.0 / c.g)
    rows = []
    for deg in range(10, 180, 10):
        t = kinematics.pendulum_period_elliptic(1.0, math.radians(deg), c)
        rows.append((float(deg), t, t / small))
    return Series(("amplitude_deg", "period_s", "ratio_to_small"), rows)


def _projectile_upright(ctx, tol):
    c = ctx.constants
    r = kinematics.projectile_trajectory(10.0, 0.0, c)
    r45 = kinematics.projectile_trajectory(10.0, math.pi / 4, c)
    return Evaluation(
        Computed(r.axis_tilt, "rad", "conic fit to uniform horizontal motion composed with free fall"),
        None,
        (
            _true("horizontal shot is a parabola", r.is_parabola),
            _true("45 degree inertial shot is a parabola", r45.is_parabola),
            _approx("45 degree axis tilt", r45.axis_tilt, 0.0, abs_=1e-9),
            _approx("apex horizontal speed", r45.apex_horizontal_speed, 10.0 * math.cos(math.pi / 4), rel=1e-9),
        ),
    )


def _projectile_upright_series(ctx):
    return Series(("t", "x", "y"), kinematics.projectile_trajectory(10.0, 0.0, ctx.constants).rows())


_DECEL = 3.0


def _projectile_tilted(ctx, tol):
    c = ctx.constants
    r = kinematics.projectile_trajectory(10.0, math.pi / 4, c, model="incline-deceleration", deceleration=_DECEL)
    s = math.sqrt(0.5)
    expected = math.atan(_DECEL * s / (c.g + _DECEL * s))
    return Evaluation(
        Computed(r.axis_tilt, "rad", "conic fit to decelerating firing-direction motion composed with free fall"),
        None,
        (
            _true("decelerated shot is still a parabola", r.is_parabola),
            _approx("axis tilt matches the acceleration direction", abs(r.axis_tilt), expected, abs_=1e-9),
        ),
    )


def _projectile_tilted_series(ctx):
    r = kinematics.projectile_trajectory(10.0, math.pi / 4, ctx.constants, model="incline-deceleration", deceleration=_DECEL)
    return Series(("t", "x", "y"), r.rows())


_RANGE_ANGLES = tuple(math.radians(d) for d in range(5, 90, 5))


def _range(ctx, tol):
    c = ctx.constants
    rows = {round(d, 9): r for d, r in kinematics.range_table(100.0, _RANGE_ANGLES, c)}
    best = max(rows, key=rows.get)
    symmetric = all(math.isclose(rows[a], rows[90.0 - a], rel_tol=1e-12) for a in rows)
    return Evaluation(
        Computed(best, "deg", "argmax of v0^2 sin(2a) / g over 5-degree steps"),
        "CONFIRMED" if symmetric and math.isclose(best, 45.0) else "REFUTED",
        (
            _approx("range at 45 degrees, v0 = 100", rows[45.0], 1020.41, abs_=0.005),
            _approx("range at 30 degrees", rows[30.0], 883.70, abs_=0.005),
            _approx("range at 60 degrees", rows[60.0], 883.70, abs_=0.005),
        ),
    )


def _range_series(ctx):
    return Series(("angle_deg", "range_m"), kinematics.range_table(100.0, _RANGE_ANGLES, ctx.constants))


def _centrifugal(ctx, tol):
    c = ctx.constants
    earth = rotation.RotatingBody.earth(c)
    fast = rotation.RotatingBody.earth(c, spin_factor=100.0)
    ver = rotation.extrusion_verdict(earth)
    limit = rotation.extrusion_limit_ratio(earth)
    fast_v = rotation.extrusion_verdict(fast)
    return Evaluation(
        Computed(limit, "ratio", "small-time limit of fall distance over tangential rise, g R / V^2"),
        "REFUTED" if math.isfinite(limit) and fast_v.verdict == "extruded" else "CONFIRMED",
        (
            _approx("tangential rise after 1 s", rotation.tangential_rise(1.0, earth), 0.0170, abs_=0.0005),
            _approx("fall after 1 s", kinematics.fall_distance(1.0, c), 4.9, abs_=1e-12),
            _approx("rise after 1 s at 100x spin", rotation.tangential_rise(1.0, fast), 170.0, abs_=1.0),
            _approx("limit ratio g R / V^2", limit, 288.6, abs_=0.1),
            _approx("numeric ratio at small t", rotation.numeric_extrusion_ratio(earth), limit, rel=1e-4),
            _approx("critical surface speed", ver.critical_speed, 7.90e3, abs_=10.0),
        ),
        (("earth_verdict", ver.verdict), ("spin_100x_verdict", fast_v.verdict)),
    )


def _centrifugal_series(ctx):
    c = ctx.constants
    earth = rotation.RotatingBody.earth(c)
    return Series(
        ("t", "tangential_rise_m", "fall_m"),
        [(float(t), rotation.tangential_rise(float(t), earth), kinematics.fall_distance(float(t), c)) for t in np.linspace(0.0, 10.0, 41)],
    )


def _path_of_fall(ctx, tol):
    spec = rotation.FallPathSpec.tower(100.0, ctx.constants)
    p = rotation.path_of_fall(spec)
    rel = p.semicircle_dev / spec.r0
    return Evaluation(
        Computed(rel, "fraction of r0", "uniform rotation composed with uniformly accelerated radial fall"),
        "REFUTED" if rel > 0.01 else "CONFIRMED",
        (
            _lt("spiral r0 - a theta^2 reproduced", p.spiral_dev, 1e-9 * spec.r0),
            _gt("semicircle deviation", rel, 0.01),
        ),
        (("theta_at_center_rad", spec.theta_at_center),),
    )


def _path_series(ctx):
    p = rotation.path_of_fall(rotation.FallPathSpec.tower(100.0, ctx.constants))
    return Series(("theta", "r", "r_semicircle"), p.rows())


def _orbits(ctx):
    return celestial.planet_orbits(ctx.constants, ctx.planets)


def _pisan(ctx, tol):
    orbits = _orbits(ctx)
    cg = celestial.pisan_drop_altitudes(orbits, "constant-g", ctx.constants)
    inv = celestial.pisan_drop_altitudes(orbits, "inverse-square", ctx.constants)
    worst = max(abs(R / (2.0 * o.radius) - 1.0) for R, o in zip(inv.radii, orbits))
    r_err, v_err = celestial.radial_fall_check(orbits[0], ctx.constants)
    return Evaluation(
        Computed(cg.spread, "relative spread", "release radius r + v^2 / 2g per planet"),
        cg.verdict,
        (
            _gt("constant-g spread", cg.spread, 5.0),
            _lt("inverse-square R* = 2r", worst, 1e-12),
            _lt("integrated fall reaches circular speed", max(r_err, v_err), 1e-8),
        ),
        (("inverse_square_spread", inv.spread),),
    )


def _pisan_series(ctx):
    orbits = _orbits(ctx)
    au = ctx.constants.AU
    cg = celestial.pisan_drop_altitudes(orbits, "constant-g", ctx.constants)
    inv = celestial.pisan_drop_altitudes(orbits, "inverse-square", ctx.constants)
    return Series(
        ("planet", "radius_au", "drop_radius_constant_g_au", "drop_radius_inverse_square_au"),
        [(o.name, o.radius / au, a / au, b / au) for o, a, b in zip(orbits, cg.radii, inv.radii)],
    )


def _moon_fall(ctx, tol):
    c = ctx.constants
    inv = celestial.moon_fall_time("inverse-square", c)
    ode = celestial.moon_fall_time_ode(c)
    const = celestial.moon_fall_time("constant-g", c)
    return Evaluation(
        Computed(inv, "s", "half period of the degenerate Earth-Moon ellipse"),
        None,
        (
            _approx("inverse-square fall time in days", inv / DAY, 4.83, abs_=0.02),
            _approx("integrated fall time", ode, inv, rel=1e-4),
            _lt("constant-g fall is hours, not days", const, DAY),
        ),
        (("constant_g_s", const), ("ode_s", ode)),
    )


def _moon_series(ctx):
    c = ctx.constants
    rows = [
        ("historical", float(celestial.GALILEO_MOON_FALL)),
        ("constant-g", celestial.moon_fall_time("constant-g", c)),
        ("inverse-square", celestial.moon_fall_time("inverse-square", c)),
        ("inverse-square-ode", celestial.moon_fall_time_ode(c)),
    ]
    return Series(("model", "seconds", "days"), [(m, s, s / DAY) for m, s in rows])


def _tides(ctx, tol):
    torus = celestial.tide_period("galileo-torus")
    bulge = celestial.tide_period("lunisolar-bulge")
    lunar = celestial.tide_period("lunisolar-bulge", lunar_day=24.84 * HOUR)
    return Evaluation(
        Computed(torus.spacing, "s", "extrema of v_orb + v_rot cos(2 pi t / day), located by root finding"),
        None,
        (
            _approx("torus extrema spacing", torus.spacing, 12 * HOUR, abs_=1.0),
            _approx("bulge extrema spacing", bulge.spacing, 6 * HOUR, abs_=1.0),
            _approx("bulge spacing for a 24.84 h lunar day", lunar.spacing, 6.21 * HOUR, abs_=1.0),
            _approx("bulge maxima per day", bulge.maxima_per_period, 2),
            _approx("torus maxima per day", torus.maxima_per_period, 1),
        ),
        (("bulge_spacing_s", bulge.spacing),),
    )


def _tides_series(ctx):
    earth = next(o for o in _orbits(ctx) if o.name == "Earth")
    rows = [(h, v, math.cos(4.0 * math.pi * h / 24.0)) for h, v in celestial.torus_speed_series(earth)]
    return Series(("hour", "torus_surface_speed", "bulge_height"), rows)


_CHAIN_SPANS = (2.0, 3.0, 3.8)


def _catenary(ctx, tol):
    base = curves.catenary_vs_parabola(curves.HangingChain(2.0, 2.5))
    ratios = [curves.catenary_vs_parabola(curves.HangingChain(s, 4.0)).deviation_over_sag for s in _CHAIN_SPANS]
    a = curves.catenary_parameter(curves.HangingChain(2.0, 2.5))
    return Evaluation(
        Computed(base.max_deviation, "m", "vertical gap between the fitted catenary and the equal-length parabola"),
        "REFUTED" if base.max_deviation > 0 else "CONFIRMED",
        (
            _gt("max deviation, span 2, length 2.5", base.max_deviation, 0.0),
            _true("deviation/sag falls as the span grows", ratios[0] > ratios[1] > ratios[2]),
            _approx("catenary arc length", curves.catenary_arc_length(a, 2.0), 2.5, rel=1e-9),
        ),
        tuple((f"deviation_over_sag_span_{s:g}", r) for s, r in zip(_CHAIN_SPANS, ratios)),
    )


def _catenary_series(ctx):
    return Series(("x", "y_catenary", "y_parabola"), curves.catenary_vs_parabola(curves.HangingChain(2.0, 2.5)).rows())


_BRACH_END = ((0.0, 0.0), (math.pi, -2.0))


def _brachistochrone(ctx, tol):
    c = ctx.constants
    rep = curves.brachistochrone_compare(*_BRACH_END, c)
    straight = math.sqrt(math.pi**2 + 4.0) * math.sqrt(2.0 / (c.g * 2.0))
    return Evaluation(
        Computed(rep.T_best_circular_arc, "s", "best circular arc by sagitta, descent times by quadrature"),
        "REFUTED" if rep.T_cycloid < rep.T_best_circular_arc else "CONFIRMED",
        (
            _true("cycloid < best arc < straight", rep.ordered),
            _approx("cycloid time", rep.T_cycloid, math.pi * math.sqrt(1.0 / c.g), rel=1e-6),
            _approx("straight time", rep.T_straight, straight, rel=1e-9),
        ),
        (
            ("t_cycloid_s", rep.T_cycloid),
            ("t_straight_s", rep.T_straight),
            ("best_sagitta_m", rep.best_sagitta),
            ("margin_cycloid_vs_arc", rep.margin_cycloid_vs_arc),
            ("margin_arc_vs_straight", rep.margin_arc_vs_straight),
        ),
    )


def _brach_series(ctx):
    c = ctx.constants
    start, end = _BRACH_END
    s_best, _ = curves.best_circular_arc(start, end, c)
    rows = []
    for kind, curve in (
        ("cycloid", curves.DescentCurve("cycloid", start, end)),
        ("circular-arc", curves.DescentCurve("circular-arc", start, end, s_best)),
        ("straight", curves.DescentCurve("straight", start, end)),
    ):
        rows.extend((kind,) + r for r in curves.sample_descent(curve, c))
    return Series(("curve", "x", "y", "t"), rows)


# ---------------------------------------------------------------- hydrostatics


def _displacement(ctx, tol):
    body = hydrostatics.FloatingPrism(0.01, 0.2, 0.5)
    cont = hydrostatics.Container(0.1, 0.05)
    eq = hydrostatics.float_equilibrium(body, cont, ctx.constants)
    ratio = eq.displaced_below_initial_level / eq.submerged_volume
    return Evaluation(
        Computed(ratio, "ratio", "volume bookkeeping for a floating prism in a finite container"),
        None,
        (
            _approx("displaced-below-initial over submerged = 1 - a/A", ratio, 1.0 - 0.01 / 0.1, rel=1e-12),
            _approx("level rise", eq.new_level - eq.initial_level, 0.01, rel=1e-12),
            _approx("buoyancy balances weight", eq.buoyant_force, eq.weight, rel=1e-12),
        ),
    )


def _wine_cooler(ctx, tol):
    a = 0.01
    body = hydrostatics.FloatingPrism(a, 0.2, 0.5)
    cont = hydrostatics.Container(1.05 * a, 0.0)
    need = hydrostatics.minimum_water(body, cont)
    eq = hydrostatics.float_equilibrium(body, hydrostatics.Container(1.05 * a, need), ctx.constants)
    ratio = eq.water_mass / eq.body_mass
    return Evaluation(
        Computed(ratio, "water mass / body mass", "least water that floats the prism in a close-fitting container"),
        "REFUTED" if ratio < 1.0 else "CONFIRMED",
        (_lt("water mass / body mass", ratio, 1.0),),
        (("water_kg", eq.water_mass), ("body_kg", eq.body_mass)),
    )


def _wreath(ctx, tol):
    c = ctx.constants
    gold = ctx.materials["gold"]
    air, water = hydrostatics.weighings(gold, 1.0, c=c)
    res = hydrostatics.wreath_density(air, water, materials=ctx.materials)
    mix = hydrostatics.mixture_density({"gold": 0.5, "silver": 0.5}, ctx.materials)
    mix_res = hydrostatics.wreath_density(*hydrostatics.weighings(mix, 1.0, c=c), materials=ctx.materials)
    return Evaluation(
        Computed(res.density, "kg/m^3", "density from weight in air and submerged"),
        None,
        (
            _true("pure gold classified as gold", res.classification == "consistent-with gold"),
            _true("half gold, half silver classified as alloy", mix_res.classification == "alloy"),
            _approx("alloy density round trip", mix_res.density, mix, rel=1e-12),
        ),
        (("alloy_density", mix_res.density),),
    )


def _paraboloid(ctx, tol):
    rows = hydrostatics.stability_grid()
    agree = sum(1 for r in rows if r[3] == r[4]) / len(rows)
    low = all(
        hydrostatics.paraboloid_upright_stability(hydrostatics.Paraboloid(1.0, h, s)).stable
        for h in (0.5, 1.0, 2.0, 2.999)
        for s in hydrostatics.STABILITY_GRID_S
    )
    crit = hydrostatics.critical_height(1.0, 0.25)
    return Evaluation(
        Computed(agree, "fraction", "metacentric height against a potential-energy scan over heel angles"),
        "CONFIRMED" if low and agree == 1.0 else "REFUTED",
        (
            _approx("critical height f = 1, s = 0.25", crit, 6.0, rel=1e-12),
            _approx("GM formula vs energy scan agreement", agree, 1.0),
            _true("stable upright at any density when H < 3f", low),
        ),
    )


def _paraboloid_series(ctx):
    return Series(("H_over_f", "s", "GM", "stable"), [r[:4] for r in hydrostatics.stability_grid(oracle=False)])


# ---------------------------------------------------------------- astronomy


def _tycho(ctx, tol):
    c = ctx.constants
    saturn = celestial.planet_orbits(c, {"Saturn": ctx.planets["Saturn"]})[0]
    b = celestial.parallax_min_distance(celestial.TYCHO_THRESHOLD, 2.0 * c.AU)
    ratio = b.ratio_to(saturn)
    return Evaluation(
        Computed(ratio, "Saturn distances", "baseline over threshold angle, divided by Saturn's orbit"),
        None,
        (
            _gt("ratio lower bound", ratio, 630.0),
            _lt("ratio upper bound", ratio, 790.0),
            _approx("exact vs small-angle distance", b.exact, b.small_angle, rel=1e-7),
        ),
        (("distance_au", b.small_angle / c.AU),),
    )


def _mizar(ctx, tol):
    s = celestial.double_star_swing(celestial.MIZAR)
    return Evaluation(
        Computed(s.peak_swing, "rad", "relative parallactic track of the pair over 365 days"),
        "CONFIRMED" if s.dramatic else "REFUTED",
        (
            _approx("differential amplitude", s.differential_amplitude, 1.111e-3, abs_=1e-6),
            _approx("peak-to-peak swing vs twice the amplitude", s.peak_swing, 2.0 * s.differential_amplitude, rel=1e-2),
            _approx("peak-to-peak in arcmin", s.peak_swing / ARCMIN, 7.6, abs_=0.1),
        ),
        (("intrinsic_offset_rad", celestial.MIZAR.intrinsic_offset),),
    )


def _mizar_series(ctx):
    s = celestial.double_star_swing(celestial.MIZAR)
    return Series(
        ("day", "separation_arcsec", "position_angle_deg"),
        [(d, sep / ARCSEC, math.degrees(pa)) for d, sep, pa in s.rows()],
    )


def _is_season_cycle(shapes) -> bool:
    ref = ["U", "diagonal", "arch", "diagonal"]
    return any(list(shapes) == ref[k:] + ref[:k] for k in range(4))


def _sunspots(ctx, tol):
    axis = celestial.SolarAxis()
    cycle = [s for _, s in celestial.sunspot_season_cycle(axis)]
    flat = {celestial.sunspot_path(celestial.SolarAxis(0.0), float(d)).shape for d in range(0, 365, 7)}
    node = celestial.sunspot_path(axis, celestial.node_day(axis))
    curved = sum(1 for s in cycle if s in ("U", "arch"))
    return Evaluation(
        Computed(float(curved), "curved tracks per four seasons", "projection of a rotating spot onto the sky plane"),
        "REFUTED" if curved > 0 else "CONFIRMED",
        (
            _true("untilted axis: straight tracks all year", flat == {"straight"}),
            _true("tilted axis: U, diagonal, arch, diagonal", _is_season_cycle(cycle)),
            _approx("node-date slope", abs(node.slope), math.tan(axis.tilt), rel=1e-3),
        ),
        tuple((f"season_{k}", s) for k, s in enumerate(cycle)),
    )


def _sunspot_series(ctx):
    axis = celestial.SolarAxis()
    rows = []
    for d in range(365):
        t = celestial.sunspot_path(axis, float(d))
        rows.append((d, t.shape, t.curvature, t.slope))
    return Series(("day", "shape", "curvature", "slope"), rows)


def _venus_phases(ctx, tol):
    m = venus.PhaseModel()
    anchor, early = venus.simulate(m, [0.0, -105.0])
    return Evaluation(
        Computed(anchor.k, "illuminated fraction", "two-circle phase geometry at the anchor date"),
        None,
        (
            _gt("k at anchor - 105 d", early.k, 0.7),
            _lt("apparent diameter at anchor - 105 d", early.diameter_ratio, 1.0),
            _lt("synodic repetition", venus.synodic_repeat_error(m), 1e-6),
        ),
        (("synodic_period_d", m.synodic_period), ("inferior_conjunction_d", m.inferior_conjunction)),
    )


def _venus_series(ctx):
    return Series(
        ("date_offset", "alpha_deg", "k", "diameter_ratio", "elongation_deg"),
        [s.row() for s in venus.grid_samples(venus.PhaseModel())],
    )


def _venus_nonlinear(ctx, tol):
    p = venus.nonlinearity_profile(venus.PhaseModel())
    return Evaluation(
        Computed(p.days_gibbous_to_near_half / p.days_lingering_near_half, "ratio", "days from k = 0.75 to 0.55 over days from 0.55 to 0.45"),
        "REFUTED" if p.lingering_reproduced else "CONFIRMED",
        (),
        (("days_gibbous_to_near_half", p.days_gibbous_to_near_half), ("days_lingering_near_half", p.days_lingering_near_half)),
    )


def _venus_tabletop(ctx, tol):
    r = venus.tabletop_equivalence(venus.PhaseModel())
    return Evaluation(
        Computed(r.scale_ratio, "ratio", "lamp distance over camera circle radius"),
        None,
        (
            _true("scale is valid", r.valid),
            _lt("largest phase difference at grid dates", r.max_k_difference, 0.02),
        ),
    )


def _aristarchus_ratio(ctx, tol):
    r87 = ancients.sun_moon_distance_ratio(ancients.DichotomyObservation(math.radians(87.0)))
    r_true = ancients.sun_moon_distance_ratio(ancients.DichotomyObservation(math.radians(89.853)))
    return Evaluation(
        Computed(r87, "ratio", "sec of the half-moon elongation"),
        None,
        (
            _approx("sec 87 degrees", r87, 19.107, abs_=0.001),
            _approx("sec 60 degrees", ancients.sun_moon_distance_ratio(ancients.DichotomyObservation(math.radians(60.0))), 2.0, rel=1e-12),
            _approx("true angle gives about 20x more", r_true / r87, 20.0, abs_=1.0),
        ),
        (("ratio_true_angle", r_true),),
    )


def _aristarchus_ci(ctx, tol):
    ci = ancients.dichotomy_ci()
    few = ancients.dichotomy_ci(observations_per_year=25.0, years=1.0)
    return Evaluation(
        Computed(ci.half_width_deg, "deg", "1.96 sigma / sqrt(n) with sigma = 12 h at half a degree per hour, n = 500"),
        None,
        (
            _approx("half-width for n = 500", ci.half_width_deg, 0.526, abs_=0.005),
            _true("87 degrees detectably low", ci.detectable),
            _approx("half-width for n = 25", few.half_width_deg, 2.35, abs_=0.005),
        ),
    )


# Aristarchus's bounds on diameter ratios (sun:earth, earth:moon)
_SUN_EARTH = (19.0 / 3.0, 43.0 / 6.0)
_EARTH_MOON = (108.0 / 43.0, 60.0 / 19.0)


def _aristarchus_volumes(ctx, tol):
    d_sun = ancients.diameter_ratio_from_volume(300.0)
    d_moon = ancients.diameter_ratio_from_volume(20.0)
    inside = _SUN_EARTH[0] < d_sun < _SUN_EARTH[1] and _EARTH_MOON[0] < d_moon < _EARTH_MOON[1]
    return Evaluation(
        Computed(d_sun, "earth diameters", "cube root of the stated volume ratio"),
        "CONFIRMED" if inside else "REFUTED",
        (
            _approx("sun diameter ratio", d_sun, 6.694, abs_=0.001),
            _approx("earth-moon diameter ratio", d_moon, 2.714, abs_=0.001),
            _approx("volume round trip", ancients.volume_ratio_from_diameter(d_sun), 300.0, rel=1e-12),
        ),
        (("earth_moon_diameter_ratio", d_moon),),
    )


def _hipparchus(ctx, tol):
    s10 = ancients.schroeder_count(ancients.BracketingProblem(10))
    brute = all(ancients.schroeder_count(ancients.BracketingProblem(n)) == ancients.brute_force(ancients.BracketingProblem(n)) for n in range(1, 7))
    return Evaluation(
        Computed(float(s10), "bracketings", "little Schroeder number s(10) by recurrence"),
        None,
        (
            _true("recurrence equals enumeration for n <= 6", brute),
            _lt("s(10) below one million", s10, 1e6),
        ),
    )


def _hipparchus_series(ctx):
    return Series(("n", "count"), ancients.schroeder_table())


# ---------------------------------------------------------------- the registry

_A = HistoricalAssertion

CLAIMS: tuple[ClaimSpec, ...] = (
    ClaimSpec("cycloid-area", "Area under one cycloid arch", "mechanics / cycloid",
              _A("Galileo", "The arch area is close to three generating circles yet differs from exactly three"),
              ("Cycloid arch area by weighing",), "REFUTED", _cycloid_area, series=_cycloid_series),
    ClaimSpec("matching-fallacy", "Speed matching on a bent ramp", "mechanics / calculus of speeds",
              _A("Galileo", "Pairing equal degrees of speed makes distances proportional to durations"),
              ("Matching degrees of speed between motions",), "REFUTED", _matching, series=_matching_series),
    ClaimSpec("mean-speed", "Mean-speed rule for uniform acceleration", "mechanics / law of fall",
              _A("Galileo", "Uniform acceleration covers the distance of uniform motion at half the final speed"),
              ("Mean-speed theorem",), "CONFIRMED", _mean_speed, series=_mean_speed_series),
    ClaimSpec("incline-ratio", "Descent times along an incline and its height", "mechanics / inclined planes",
              _A("Galileo", "Descent times along an incline and its vertical are as their lengths", 2.0, "ratio"),
              ("Inclined-plane time ratio",), "CONFIRMED", _incline, Tolerance(0.0, 1e-9), series=_incline_series),
    ClaimSpec("pendulum-isochrony", "Pendulum period and amplitude", "mechanics / pendulum",
              _A("Galileo", "Pendulum period is independent of amplitude", 1.0, "ratio"),
              ("Pendulum isochrony",), "REFUTED", _pendulum, Tolerance(1e-3, 0.0), series=_pendulum_series),
    ClaimSpec("projectile-upright", "Horizontal projectile path", "mechanics / projectiles",
              _A("Galileo", "Uniform horizontal motion plus free fall gives an upright parabola", 0.0, "rad"),
              ("Projectile parabola",), "CONFIRMED", _projectile_upright, Tolerance(1e-9, 0.0), series=_projectile_upright_series),
    ClaimSpec("projectile-tilted", "Projectile with a decelerating firing motion", "mechanics / projectiles",
              _A("Galileo", "An oblique shot decelerating along its firing line follows an upright parabola", 0.0, "rad"),
              ("Oblique projectile composition",), "REFUTED", _projectile_tilted, Tolerance(1e-9, 0.0), series=_projectile_tilted_series),
    ClaimSpec("range-table", "Range against elevation", "mechanics / ballistics",
              _A("Galileo", "Range peaks at 45 degrees and is equal for elevations equally above and below it"),
              ("Ballistic range tables",), "CONFIRMED", _range, series=_range_series),
    ClaimSpec("centrifugal-extrusion", "Bodies flung from a spinning Earth", "mechanics / rotating Earth",
              _A("Galileo", "No spin can fling bodies off, since fall always outruns the tangential rise near t = 0"),
              ("Centrifugal extrusion argument",), "REFUTED", _centrifugal, series=_centrifugal_series),
    ClaimSpec("path-of-fall", "Path of a body dropped on a rotating Earth", "mechanics / rotating Earth",
              _A("Galileo", "A body falling from a tower traces a semicircle ending at the Earth's centre"),
              ("Semicircular path of fall",), "REFUTED", _path_of_fall, series=_path_series),
    ClaimSpec("pisan-drop", "A common release altitude for the planets", "astronomy / planetary speeds",
              _A("Galileo", "All planets could have fallen from one place and gained their present orbital speeds"),
              ("Common release point of the planets",), "REFUTED", _pisan, series=_pisan_series),
    ClaimSpec("moon-fall", "Time for the Moon to fall to Earth", "astronomy / Moon",
              _A("Galileo", "The Moon released from rest falls to the Earth's centre in 3 h 22 min 4 s", float(celestial.GALILEO_MOON_FALL), "s"),
              ("Moon fall time",), "REFUTED", _moon_fall, Tolerance(0.0, 0.05), series=_moon_series),
    ClaimSpec("tides-period", "Tide interval under the torus theory", "mechanics / tides",
              _A("observation", "Successive high and low tides are about 6 h apart", 6 * HOUR, "s"),
              ("Tide theory from combined Earth motions",), "REFUTED", _tides, Tolerance(60.0, 0.0), series=_tides_series),
    ClaimSpec("catenary", "Shape of a hanging chain", "mechanics / curves",
              _A("Galileo", "A chain hanging between two points takes a parabolic shape"),
              ("Hanging chain shape",), "REFUTED", _catenary, series=_catenary_series),
    ClaimSpec("brachistochrone", "Fastest descent between two points", "mechanics / curves",
              _A("Galileo", "No path between two points is descended faster than a circular arc"),
              ("Fastest descent curve",), "REFUTED", _brachistochrone, series=_brach_series),
    ClaimSpec("displacement-blunder", "Water displaced in a closed container", "hydrostatics / floating bodies",
              _A("textbook statement", "In a container a floating body displaces water equal to its whole submerged volume", 1.0, "ratio"),
              ("Displacement in a finite container",), "REFUTED", _displacement, Tolerance(0.0, 1e-9)),
    ClaimSpec("wine-cooler", "Floating a body on little water", "hydrostatics / floating bodies",
              _A("common intuition", "A body can only be floated by at least its own mass of water"),
              ("Floating on less water than the body's mass",), "REFUTED", _wine_cooler),
    ClaimSpec("wreath", "Density of the wreath by weighing", "hydrostatics / density",
              _A("Archimedes", "Weighing in air and in water reveals the density of a solid gold wreath", 19300.0, "kg/m^3"),
              ("Wreath density test",), "CONFIRMED", _wreath, Tolerance(0.0, 1e-12)),
    ClaimSpec("paraboloid-stability", "Upright stability of a floating paraboloid", "hydrostatics / floating bodies",
              _A("Archimedes", "A paraboloid no taller than three quarters of its parameter floats upright at any density"),
              ("Floating paraboloid stability",), "CONFIRMED", _paraboloid, series=_paraboloid_series),
    ClaimSpec("tycho-distance", "Minimum star distance without visible parallax", "astronomy / parallax",
              _A("Tycho Brahe", "With a moving Earth the stars would lie at least 700 times farther than Saturn", 700.0, "Saturn distances"),
              ("Stellar distance bound from parallax",), "CONFIRMED", _tycho, Tolerance(0.0, 0.1)),
    ClaimSpec("mizar-parallax", "Annual swing of the Mizar pair", "astronomy / parallax",
              _A("reconstruction", "A pair at 300 and 450 AU shifts by far more than its 15 arcsec separation over a year"),
              ("Double-star differential parallax",), "CONFIRMED", _mizar, series=_mizar_series),
    ClaimSpec("sunspot-seasons", "Seasonal shapes of sunspot tracks", "astronomy / sunspots",
              _A("Galileo", "Spot tracks across the solar disc are straight lines in every season"),
              ("Sunspot track geometry",), "REFUTED", _sunspots, series=_sunspot_series),
    ClaimSpec("venus-phases", "Phases of Venus in late 1610", "astronomy / Venus",
              _A("Galileo", "Venus was exactly half-lit on 1610-12-18", 0.5, "illuminated fraction"),
              ("Venus phase sequence",), "CONFIRMED", _venus_phases, Tolerance(1e-12, 0.0), series=_venus_series),
    ClaimSpec("venus-nonlinearity", "Rate of Venus phase change near half phase", "astronomy / Venus",
              _A("modern critique", "Two uniform circular orbits cannot make k fall from 0.75 to 0.55 faster than it then falls from 0.55 to 0.45"),
              ("Non-linear Venus phase change",), "REFUTED", _venus_nonlinear),
    ClaimSpec("venus-tabletop", "Tabletop scale model of the Venus orbit", "astronomy / Venus",
              _A("reconstruction", "Lamp radius 4.34 m over camera radius 6 m equals the Venus-Earth orbit ratio", 0.723, "ratio"),
              ("Tabletop Venus model",), "CONFIRMED", _venus_tabletop, Tolerance(0.0, 1e-3)),
    ClaimSpec("aristarchus-ratio", "Sun-Moon distance ratio at half moon", "ancient astronomy / Aristarchus",
              _A("Aristarchus", "At half moon the Sun-Moon elongation is 87 degrees, so the Sun is about 19 times farther", 19.0, "ratio"),
              ("Aristarchus half-moon geometry",), "CONFIRMED", _aristarchus_ratio, Tolerance(1.0, 0.0)),
    ClaimSpec("aristarchus-ci", "Averaging many crude half-moon timings", "ancient astronomy / Aristarchus",
              _A("reconstruction", "The mean of 500 half-moon timings with 12 h scatter has a 95% half-width near 0.5 degrees", 0.5, "deg"),
              ("Averaging half-moon observations",), "CONFIRMED", _aristarchus_ci, Tolerance(0.05, 0.0)),
    ClaimSpec("aristarchus-volumes", "Volume ratios of Sun, Earth and Moon", "ancient astronomy / Aristarchus",
              _A("Aristarchus", "The Sun has about 300 Earth volumes and the Earth about 20 Moon volumes"),
              ("Aristarchus size bounds",), "CONFIRMED", _aristarchus_volumes),
    ClaimSpec("hipparchus-combinatorics", "Compound statements from ten simple ones", "ancient mathematics / combinatorics",
              _A("Hipparchus", "Ten simple statements admit 103,049 affirmative compound statements", 103049.0, "count"),
              ("Hipparchus's count of compound statements",), "CONFIRMED", _hipparchus, Tolerance(0.5, 0.0), series=_hipparchus_series),
)


class Registry:
    """Immutable mapping from claim id to its definition."""

    def __init__(self, claims: tuple[ClaimSpec, ...] = CLAIMS):
        ids = [c.id for c in claims]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate claim ids")
        self._claims = {c.id: c for c in sorted(claims, key=lambda c: c.id)}

    @property
    def ids(self) -> list[str]:
        return list(self._claims)

    def get(self, claim_id: str) -> ClaimSpec:
        try:
            return self._claims[claim_id]
        except KeyError:
            raise NotFoundError(claim_id, difflib.get_close_matches(claim_id, self.ids, n=3, cutoff=0.5)) from None

    def list_claims(self) -> list[ClaimRecord]:
        return [c.record() for c in self._claims.values()]

    def run(self, claim_id: str, cfg: RunConfig | None = None) -> ClaimRecord:
        spec = self.get(claim_id)
        cfg = cfg or RunConfig()
        tol = cfg.tolerances.get(spec.id, spec.tolerance)
        base = dataclasses.replace(spec.record(), tolerance=tol)
        if spec.blocked_by is not None:
            return dataclasses.replace(base, verdict="INCONCLUSIVE", note=spec.blocked_by)
        try:
            ev = spec.evaluate(Context.from_config(cfg), tol)
        except HistmechError as exc:
            return dataclasses.replace(base, error=f"{type(exc).__name__}: {exc}")
        verdict = ev.verdict
        h = spec.assertion.value
        if verdict is None:
            if h is None or ev.computed.value is None or tol is None:
                raise ValueError(f"claim {spec.id} has no verdict rule")
            verdict = numeric_verdict(h, ev.computed.value, tol)
        return dataclasses.replace(base, computed=ev.computed, verdict=verdict, checks=ev.checks, details=ev.details)

    def run_all(self, cfg: RunConfig | None = None) -> list[ClaimRecord]:
        cfg = cfg or RunConfig()
        if cfg.parallel == 1:
            return [self.run(cid, cfg) for cid in self.ids]
        with ThreadPoolExecutor(max_workers=cfg.parallel) as pool:
            results = list(pool.map(lambda cid: self.run(cid, cfg), self.ids))
        return sorted(results, key=lambda r: r.id)

    def series(self, claim_id: str, cfg: RunConfig | None = None) -> Series:
        spec = self.get(claim_id)
        if spec.series is None:
            raise NoDataError(f"claim {claim_id!r} produces no series")
        return spec.series(Context.from_config(cfg or RunConfig()))


REGISTRY = Registry()


def list_claims() -> list[ClaimRecord]:
    return REGISTRY.list_claims()


def run_claim(claim_id: str, cfg: RunConfig | None = None) -> ClaimRecord:
    return REGISTRY.run(claim_id, cfg)


__all__ = [
    "Context",
    "Evaluation",
    "Series",
    "ClaimSpec",
    "CLAIMS",
    "Registry",
    "REGISTRY",
    "list_claims",
    "run_claim",
]
