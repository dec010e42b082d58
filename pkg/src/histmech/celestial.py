"""Solar-system arguments: a common drop altitude for the planets, the Moon
falling to the Earth, tide periods, stellar parallax bounds, the Mizar pair,
and the projected paths of sunspots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .constants import ARCMIN, ARCSEC, DAY, HOUR, DEFAULT_CONSTANTS, PhysicalConstants
from .errors import DomainError, UnreachableAltitudeError, VisibilityError
from .kernels import Tolerance, find_root, integrate_ode
from .rotation import EARTH_EQUATORIAL_SPEED

YEAR_DAYS = 365.25

# semi-major axis [AU], sidereal period [day]
PLANETS: dict[str, tuple[float, float]] = {
    "Mercury": (0.387098, 87.969),
    "Venus": (0.723332, 224.701),
    "Earth": (1.0, 365.256),
    "Mars": (1.523679, 686.980),
    "Jupiter": (5.2044, 4332.59),
    "Saturn": (9.5826, 10759.22),
}


@dataclass(frozen=True)
class OrbitSpec:
    radius: float  # m
    period: float  # s
    name: str = ""

    def __post_init__(self):
        if not (self.radius > 0 and self.period > 0):
            raise DomainError("orbit radius and period must be positive")

    @property
    def speed(self) -> float:
        return 2.0 * math.pi * self.radius / self.period


def planet_orbits(c: PhysicalConstants = DEFAULT_CONSTANTS, table: dict[str, tuple[float, float]] | None = None) -> list[OrbitSpec]:
    table = PLANETS if table is None else table
    return [OrbitSpec(a * c.AU, p * DAY, name) for name, (a, p) in table.items()]


# ---------------------------------------------------------------- Pisan drop


@dataclass(frozen=True)
class DropAltitudes:
    model: str
    radii: tuple[float, ...]  # R* per orbit, m
    names: tuple[str, ...]
    spread: float
    verdict: str


def pisan_drop_altitudes(
    orbits: Sequence[OrbitSpec],
    model: Literal["constant-g", "inverse-square"],
    c: PhysicalConstants = DEFAULT_CONSTANTS,
    *,
    speed: Literal["circular", "period"] = "circular",
) -> DropAltitudes:
    """Radius from which a body released at rest reaches each orbit with the
    orbit's speed.

    Under constant ``g`` this is r + v^2/2g with v = 2 pi r / T. Under the
    Sun's inverse-square pull the speed is the circular speed sqrt(GM/r)
    unless ``speed="period"`` asks for the tabulated one; the drop radius
    then solves v^2 = 2GM (1/r - 1/R).
    """
    if not orbits:
        raise DomainError("at least one orbit is required")
    radii = []
    for o in orbits:
        if model == "constant-g":
            radii.append(o.radius + o.speed**2 / (2.0 * c.g))
        elif model == "inverse-square":
            mu = c.mu_sun
            v2 = mu / o.radius if speed == "circular" else o.speed**2
            inv = 1.0 / o.radius - v2 / (2.0 * mu)
            if inv <= 0:
                raise UnreachableAltitudeError(
                    f"{o.name or 'orbit'}: speed reaches escape speed, no finite release altitude"
                )
            radii.append(1.0 / inv)
        else:
            raise DomainError(f"unknown model {model!r}")
    lo, hi = min(radii), max(radii)
    spread = (hi - lo) / lo
    return DropAltitudes(model, tuple(radii), tuple(o.name for o in orbits), spread, "REFUTED" if spread > 0.01 else "CONFIRMED")


def radial_fall_check(orbit: OrbitSpec, c: PhysicalConstants = DEFAULT_CONSTANTS) -> tuple[float, float]:
    """Integrate a fall from rest at 2r under the Sun and return the relative
    errors in (radius, speed) against (r, circular speed) at the time the
    radial Kepler solution reaches r.

    Works in units where the release radius and GM are one.
    """

    def deriv(t, y):
        return [y[1], -1.0 / (y[0] * y[0])]

    # time from R to R/2 for a radial orbit of apocentre R, in sqrt(R^3/GM)
    x = 0.5
    t_hit = (math.sqrt(x * (1.0 - x)) + math.acos(math.sqrt(x))) / math.sqrt(2.0)
    traj = integrate_ode([1.0, 0.0], deriv, (0.0, t_hit), Tolerance(1e-13, 1e-12))
    r, v = traj.final
    # circular speed at R/2 in these units is sqrt(2)
    return abs(r - 0.5) / 0.5, abs(abs(v) - math.sqrt(2.0)) / math.sqrt(2.0)


# ---------------------------------------------------------------- Moon fall

GALILEO_MOON_FALL = 3 * HOUR + 22 * 60 + 4  # s


def moon_fall_time(model: Literal["constant-g", "inverse-square"], c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Seconds for the Moon, stopped in its orbit, to fall to the Earth's centre."""
    d = c.moon_distance
    if model == "constant-g":
        return math.sqrt(2.0 * d / c.g)
    if model == "inverse-square":
        a = 0.5 * d
        return math.pi * math.sqrt(a**3 / c.mu_earth_moon)
    raise DomainError(f"unknown model {model!r}")


def moon_fall_time_ode(c: PhysicalConstants = DEFAULT_CONSTANTS, *, r_stop: float = 1e-9) -> float:
    """Inverse-square fall time by direct integration.

    The first stretch runs in time; the approach to the centre is integrated
    in u = -ln r with state (t, v^2), which removes the collision singularity.
    The remaining fall inside ``r_stop`` adds (2/3) r^1.5 / sqrt(2), its
    leading-order asymptote.
    """
    unit_t = math.sqrt(c.moon_distance**3 / c.mu_earth_moon)
    tol = Tolerance(1e-13, 1e-12)

    t1 = 0.5
    traj = integrate_ode([1.0, 0.0], lambda t, y: [y[1], -1.0 / (y[0] * y[0])], (0.0, t1), tol)
    r1, v1 = traj.final

    def deriv(u, y):
        r = math.exp(-u)
        return [r / math.sqrt(y[1]), 2.0 / r]

    tail = integrate_ode([t1, v1 * v1], deriv, (-math.log(r1), -math.log(r_stop)), tol, min_steps=64)
    t_end = tail.final[0] + (2.0 / 3.0) * r_stop**1.5 / math.sqrt(2.0)
    return t_end * unit_t


# ---------------------------------------------------------------- tides


@dataclass(frozen=True)
class TideResult:
    model: str
    spacing: float  # s between consecutive extrema
    maxima_per_period: int
    extrema: tuple[float, ...]


def _extrema(deriv, second, period: float, cycles: int = 2, samples_per_period: int = 720):
    n = cycles * samples_per_period
    grid = np.linspace(0.0, cycles * period, n + 1)
    vals = [deriv(float(t)) for t in grid]
    roots, maxima = [], 0
    for i in range(n):
        a, b = vals[i], vals[i + 1]
        if a == 0.0:
            root = float(grid[i])
        elif a * b < 0:
            root = find_root(deriv, (float(grid[i]), float(grid[i + 1])), Tolerance(1e-9, 1e-15))
        else:
            continue
        if roots and abs(root - roots[-1]) < 1e-6:
            continue
        roots.append(root)
        if root < period and second(root) < 0:
            maxima += 1
    return roots, maxima


def tide_period(
    model: Literal["lunisolar-bulge", "galileo-torus"],
    *,
    lunar_day: float = 24 * HOUR,
    rotation_period: float = 24 * HOUR,
    surface_speed: float = EARTH_EQUATORIAL_SPEED,
) -> TideResult:
    """Spacing between consecutive high and low water for two forcings.

    The bulge model rotates a two-lobed tide under the observer once per
    lunar day. The torus model drives the sea by the sum of orbital and
    rotational surface speeds, v_orb + v_rot cos(2 pi t / T_rot); the constant
    orbital term does not move the extrema.
    """
    if model == "lunisolar-bulge":
        if not lunar_day > 0:
            raise DomainError("lunar day must be positive")
        period = lunar_day
        w = 4.0 * math.pi / lunar_day
        deriv = lambda t: -w * math.sin(w * t)  # noqa: E731
        second = lambda t: -w * w * math.cos(w * t)  # noqa: E731
    elif model == "galileo-torus":
        if not rotation_period > 0:
            raise DomainError("rotation period must be positive")
        period = rotation_period
        w = 2.0 * math.pi / rotation_period
        deriv = lambda t: -surface_speed * w * math.sin(w * t)  # noqa: E731
        second = lambda t: -surface_speed * w * w * math.cos(w * t)  # noqa: E731
    else:
        raise DomainError(f"unknown model {model!r}")
    roots, maxima = _extrema(deriv, second, period)
    spacing = float(np.mean(np.diff(roots)))
    return TideResult(model, spacing, maxima, tuple(roots))


def torus_speed_series(orbit: OrbitSpec, rotation_period: float = 24 * HOUR, surface_speed: float = EARTH_EQUATORIAL_SPEED, samples: int = 97):
    """(hour, surface speed) over one rotation for the torus forcing."""
    t = np.linspace(0.0, rotation_period, samples)
    v = orbit.speed + surface_speed * np.cos(2.0 * math.pi * t / rotation_period)
    return [(float(a) / HOUR, float(b)) for a, b in zip(t, v)]


# ---------------------------------------------------------------- parallax


@dataclass(frozen=True)
class ParallaxBound:
    small_angle: float  # m
    exact: float  # m

    def ratio_to(self, orbit: OrbitSpec) -> float:
        return self.small_angle / orbit.radius


def parallax_min_distance(threshold: float, baseline: float) -> ParallaxBound:
    """Least distance at which a baseline subtends no more than ``threshold``."""
    if not threshold > 0:
        raise DomainError("threshold must be positive")
    if not baseline > 0:
        raise DomainError("baseline must be positive")
    return ParallaxBound(baseline / threshold, baseline / (2.0 * math.tan(0.5 * threshold)))


TYCHO_THRESHOLD = ARCMIN


@dataclass(frozen=True)
class StarPair:
    distance_near: float  # AU
    distance_far: float  # AU
    intrinsic_offset: float = 15.0 * ARCSEC  # rad

    def __post_init__(self):
        if not 0 < self.distance_near <= self.distance_far:
            raise DomainError("need 0 < near <= far")


MIZAR = StarPair(300.0, 450.0)


@dataclass(frozen=True)
class DoubleStarSwing:
    days: np.ndarray
    offset: np.ndarray  # (n, 2) far star relative to near star, rad
    separation: np.ndarray
    position_angle: np.ndarray
    differential_amplitude: float
    peak_swing: float
    dramatic: bool

    def rows(self):
        return [(float(d), float(s), float(p)) for d, s, p in zip(self.days, self.separation, self.position_angle)]


def earth_position(days) -> np.ndarray:
    """Heliocentric Earth on a unit circle, AU."""
    ang = 2.0 * math.pi * np.asarray(days, dtype=float) / YEAR_DAYS
    return np.column_stack([np.cos(ang), np.sin(ang)])


def parallactic_offset(pair: StarPair, days) -> np.ndarray:
    """Annual part of the far-minus-near offset for stars at the ecliptic pole."""
    return earth_position(days) * (1.0 / pair.distance_near - 1.0 / pair.distance_far)


def double_star_swing(pair: StarPair, days: Iterable[float] | None = None) -> DoubleStarSwing:
    """Apparent offset of the far star from the near one across a year.

    Each star's direction shifts by -E/D for Earth position E and distance D;
    the pair's relative offset therefore traces a circle of radius
    1/near - 1/far around the intrinsic offset. ``peak_swing`` is the largest
    distance between any two sampled offsets, which is the peak-to-peak
    excursion of the pair.
    """
    days = np.arange(365.0) if days is None else np.asarray(list(days), dtype=float)
    rel = parallactic_offset(pair, days) + np.array([pair.intrinsic_offset, 0.0])
    sep = np.hypot(rel[:, 0], rel[:, 1])
    pa = np.arctan2(rel[:, 1], rel[:, 0])
    diff = rel[:, None, :] - rel[None, :, :]
    peak = float(np.sqrt(np.max(np.sum(diff * diff, axis=-1))))
    amplitude = 1.0 / pair.distance_near - 1.0 / pair.distance_far
    return DoubleStarSwing(days, rel, sep, pa, amplitude, peak, peak > 10.0 * pair.intrinsic_offset)


# ---------------------------------------------------------------- sunspots

SOLAR_TILT = math.radians(7.25)
SOLAR_NODE = math.radians(73.67)
EARTH_LONGITUDE_DAY0 = math.radians(100.5)  # heliocentric, start of the year

_SMALL_CURVATURE = 0.02
_DIAGONAL_SLOPE = 0.05


@dataclass(frozen=True)
class SolarAxis:
    tilt: float = SOLAR_TILT
    node_longitude: float = SOLAR_NODE

    def __post_init__(self):
        if not 0 <= self.tilt < math.pi / 2:
            raise DomainError("tilt must lie in [0, pi/2)")

    @property
    def vector(self) -> np.ndarray:
        s = math.sin(self.tilt)
        return np.array([s * math.sin(self.node_longitude), -s * math.cos(self.node_longitude), math.cos(self.tilt)])


@dataclass(frozen=True)
class SunspotTrack:
    x: np.ndarray  # disc units, towards ecliptic east
    y: np.ndarray  # disc units, towards ecliptic north
    curvature: float  # 2 c2 of the quadratic fit
    slope: float
    shape: Literal["U", "arch", "diagonal", "straight"]

    def rows(self):
        return [(float(a), float(b)) for a, b in zip(self.x, self.y)]


def earth_longitude(day_of_year: float) -> float:
    return EARTH_LONGITUDE_DAY0 + 2.0 * math.pi * day_of_year / YEAR_DAYS


def classify_track(curvature: float, slope: float) -> str:
    if abs(curvature) >= _SMALL_CURVATURE:
        return "U" if curvature > 0 else "arch"
    return "diagonal" if abs(slope) > _DIAGONAL_SLOPE else "straight"


def sunspot_path(axis: SolarAxis, day_of_year: float, spot_latitude: float = 0.0, samples: int = 201) -> SunspotTrack:
    """Track of a spot across the visible disc during one transit.

    The spot rides a circle of heliographic latitude about the solar axis.
    Points facing the Earth are projected onto the sky plane, with x along
    ecliptic east and y towards the ecliptic north pole, and the track is
    fitted with y = c0 + c1 x + c2 x^2.
    """
    if not abs(spot_latitude) < math.pi / 2:
        raise DomainError("spot latitude must lie in (-pi/2, pi/2)")
    lam = earth_longitude(day_of_year)
    to_earth = np.array([math.cos(lam), math.sin(lam), 0.0])
    h = np.array([-math.sin(lam), math.cos(lam), 0.0])
    v = np.array([0.0, 0.0, 1.0])
    a = axis.vector
    u = np.cross(v, a)
    if np.linalg.norm(u) < 1e-12:
        u = np.array([1.0, 0.0, 0.0])
    u /= np.linalg.norm(u)
    w = np.cross(a, u)
    cb, sb = math.cos(spot_latitude), math.sin(spot_latitude)
    amp = cb * math.hypot(u @ to_earth, w @ to_earth)
    psi = math.atan2(w @ to_earth, u @ to_earth)
    need = -sb * (a @ to_earth)
    if amp <= 0 or need / amp >= 1.0:
        raise VisibilityError("spot stays on the far side of the Sun on this date")
    half = math.pi if need / amp <= -1.0 else math.acos(need / amp)
    phi = psi + np.linspace(-half, half, samples)
    pts = cb * (np.outer(np.cos(phi), u) + np.outer(np.sin(phi), w)) + sb * a
    x, y = pts @ h, pts @ v
    c2, c1, _ = np.polyfit(x, y, 2)
    curvature = 2.0 * float(c2)
    return SunspotTrack(x, y, curvature, float(c1), classify_track(curvature, float(c1)))


def node_day(axis: SolarAxis) -> float:
    """First day of the year on which the Earth lies on the solar node line."""
    return ((axis.node_longitude - EARTH_LONGITUDE_DAY0) % (2.0 * math.pi)) * YEAR_DAYS / (2.0 * math.pi)


def sunspot_season_cycle(axis: SolarAxis, start_day: float | None = None, spot_latitude: float = 0.0) -> list[tuple[float, str]]:
    """Shapes on four dates a quarter-year apart, starting a quarter after the node date by default."""
    if start_day is None:
        start_day = node_day(axis) + 0.25 * YEAR_DAYS
    out = []
    for k in range(4):
        d = start_day + 0.25 * k * YEAR_DAYS
        out.append((d, sunspot_path(axis, d, spot_latitude).shape))
    return out


__all__ = [
    "YEAR_DAYS",
    "PLANETS",
    "OrbitSpec",
    "planet_orbits",
    "DropAltitudes",
    "pisan_drop_altitudes",
    "radial_fall_check",
    "GALILEO_MOON_FALL",
    "moon_fall_time",
    "moon_fall_time_ode",
    "TideResult",
    "tide_period",
    "torus_speed_series",
    "ParallaxBound",
    "parallax_min_distance",
    "TYCHO_THRESHOLD",
    "StarPair",
    "MIZAR",
    "DoubleStarSwing",
    "earth_position",
    "parallactic_offset",
    "double_star_swing",
    "SOLAR_TILT",
    "SOLAR_NODE",
    "SolarAxis",
    "SunspotTrack",
    "earth_longitude",
    "classify_track",
    "sunspot_path",
    "node_day",
    "sunspot_season_cycle",
]
