"""Law of fall, mean-speed theorem, the speed-matching proof technique and its
counterexamples, ramps, pendulum anisochrony and projectile trajectories.

All ramp and incline computations model a sliding point mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

import numpy as np

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import DomainError, MatchingError, NonStartingError
from .kernels import Tolerance, find_root, integrate_ode, quad

__all__ = [
    "PhysicalConstants",
    "MotionProfile",
    "Matching",
    "AuditReport",
    "RampPath",
    "fall_distance",
    "fall_velocity",
    "mean_speed_distance",
    "matching_audit",
    "ramp_descent_time",
    "ramp_profile",
    "pendulum_period",
    "pendulum_period_elliptic",
    "agm",
    "ProjectileResult",
    "projectile_trajectory",
    "fit_conic",
    "range_table",
]

_QUAD_TOL = Tolerance(1e-12, 1e-12)


# ---------------------------------------------------------------- law of fall


def fall_distance(t: float, c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    if t < 0:
        raise DomainError("time must be non-negative")
    return 0.5 * c.g * t * t


def fall_velocity(t: float, c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    if t < 0:
        raise DomainError("time must be non-negative")
    return c.g * t


# ---------------------------------------------------------------- profiles


@dataclass(frozen=True)
class MotionProfile:
    """Speed as a function of time on ``[0, duration]``.

    ``kind`` is one of ``"uniform"`` (constant ``rate`` m/s), ``"linear"``
    (speed ``rate * t``) or ``"sampled"`` (piecewise-linear through
    ``times``/``speeds``).
    """

    kind: Literal["uniform", "linear", "sampled"]
    duration: float
    rate: float = 0.0
    times: tuple[float, ...] = ()
    speeds: tuple[float, ...] = ()

    def __post_init__(self):
        if not self.duration > 0:
            raise DomainError("duration must be positive")
        if self.kind == "uniform":
            if self.rate < 0:
                raise DomainError("speed must be non-negative")
        elif self.kind == "linear":
            if self.rate < 0:
                raise DomainError("acceleration must be non-negative")
        elif self.kind == "sampled":
            ts, vs = self.times, self.speeds
            if len(ts) < 2 or len(ts) != len(vs):
                raise DomainError("sampled profile needs matching times/speeds, at least two")
            if ts[0] != 0.0 or any(b <= a for a, b in zip(ts, ts[1:])):
                raise DomainError("times must start at 0 and increase strictly")
            if any(v < 0 for v in vs):
                raise DomainError("speeds must be non-negative")
            if not math.isclose(ts[-1], self.duration, rel_tol=1e-12):
                raise DomainError("last sample time must equal the duration")
        else:
            raise DomainError(f"unknown profile kind {self.kind!r}")

    @classmethod
    def uniform(cls, speed: float, duration: float) -> "MotionProfile":
        return cls("uniform", float(duration), rate=float(speed))

    @classmethod
    def linear(cls, acceleration: float, duration: float) -> "MotionProfile":
        return cls("linear", float(duration), rate=float(acceleration))

    @classmethod
    def sampled(cls, times: Sequence[float], speeds: Sequence[float]) -> "MotionProfile":
        ts = tuple(float(t) for t in times)
        return cls("sampled", ts[-1], times=ts, speeds=tuple(float(v) for v in speeds))

    def speed(self, t: float) -> float:
        if self.kind == "uniform":
            return self.rate
        if self.kind == "linear":
            return self.rate * t
        return float(np.interp(t, self.times, self.speeds))

    @property
    def final_speed(self) -> float:
        return self.speed(self.duration)

    def time_at_speed(self, v: float) -> float:
        """Inverse of :meth:`speed`; defined only for strictly increasing speed."""
        if self.kind == "uniform":
            raise MatchingError("speed is constant; no state is singled out by its speed")
        if self.kind == "linear":
            if self.rate == 0:
                raise MatchingError("speed is constant; no state is singled out by its speed")
            return v / self.rate
        vs = self.speeds
        if any(b <= a for a, b in zip(vs, vs[1:])):
            raise MatchingError("speed is not strictly increasing; matching by drop is undefined")
        return float(np.interp(v, vs, self.times))


def mean_speed_distance(profile: MotionProfile) -> float:
    """Distance covered, the integral of speed over the profile's duration."""
    if profile.kind == "sampled":
        ts, vs = profile.times, profile.speeds
        total = 0.0
        for t0, t1, v0, v1 in zip(ts, ts[1:], vs, vs[1:]):
            slope = (v1 - v0) / (t1 - t0)
            total += quad(lambda t: v0 + slope * (t - t0), (t0, t1), _QUAD_TOL, endpoint_transform=False)
        return total
    return quad(profile.speed, (0.0, profile.duration), _QUAD_TOL)


@dataclass(frozen=True)
class Matching:
    rule: Literal["equal-time-fraction", "equal-vertical-drop"]

    def __post_init__(self):
        if self.rule not in ("equal-time-fraction", "equal-vertical-drop"):
            raise DomainError(f"unknown matching rule {self.rule!r}")

    def time_for(self, profile: MotionProfile, u: float) -> float:
        """Time at which ``profile`` reaches matching parameter ``u`` in [0, 1].

        Equal vertical drop is parameterized by the fraction of the total
        drop; for a point mass the drop is ``v**2 / 2g``, so the matched state
        has speed ``sqrt(u) * v_final``.
        """
        if self.rule == "equal-time-fraction":
            return u * profile.duration
        return profile.time_at_speed(math.sqrt(u) * profile.final_speed)


@dataclass(frozen=True)
class AuditReport:
    speeds_matched: bool
    distances: tuple[float, float]
    durations: tuple[float, float]
    distance_ratio: float
    time_ratio: float
    mismatch: float
    galilean_inference_holds: bool


def matching_audit(
    a: MotionProfile, b: MotionProfile, m: Matching, *, samples: int = 33
) -> AuditReport:
    """Test whether pairing 'degrees of speed' licenses the distance/time inference.

    The report never presumes the inference: it checks whether matched states
    share their speed and, separately, whether the ratio of distances equals
    the ratio of times.
    """
    matched = True
    for i in range(samples):
        u = i / (samples - 1)
        va = a.speed(m.time_for(a, u))
        vb = b.speed(m.time_for(b, u))
        if not math.isclose(va, vb, rel_tol=1e-9, abs_tol=1e-12 * max(a.final_speed, b.final_speed, 1.0)):
            matched = False
    da, db = mean_speed_distance(a), mean_speed_distance(b)
    distance_ratio = db / da
    time_ratio = b.duration / a.duration
    mismatch = abs(distance_ratio / time_ratio - 1.0)
    return AuditReport(
        speeds_matched=matched,
        distances=(da, db),
        durations=(a.duration, b.duration),
        distance_ratio=distance_ratio,
        time_ratio=time_ratio,
        mismatch=mismatch,
        galilean_inference_holds=mismatch <= 1e-6,
    )


# ---------------------------------------------------------------- ramps


@dataclass(frozen=True)
class RampPath:
    """Planar descending path parameterized by arc length ``s`` in ``[0, length]``.

    ``drop(s)`` is the vertical distance below the start; ``point(s)`` gives
    ``(x, y)`` with the start at the origin.
    """

    length: float
    drop: Callable[[float], float] = field(repr=False)
    point: Callable[[float], tuple[float, float]] = field(repr=False)
    label: str = "ramp"

    def __post_init__(self):
        if not (self.length > 0 and math.isfinite(self.length)):
            raise DomainError("ramp length must be positive and finite")
        ss = np.linspace(0.0, self.length, 257)
        drops = [self.drop(float(s)) for s in ss]
        if drops[-1] <= 0:
            raise DomainError("ramp must end below its start")
        if any(d1 < d0 - 1e-12 * self.length for d0, d1 in zip(drops, drops[1:])):
            raise DomainError("ramp must be non-increasing in height")

    @property
    def height(self) -> float:
        return self.drop(self.length)

    @classmethod
    def straight(cls, length: float, height: float) -> "RampPath":
        if not 0 < height <= length:
            raise DomainError("straight ramp needs 0 < height <= length")
        sin_a = height / length
        cos_a = math.sqrt(max(0.0, 1.0 - sin_a * sin_a))
        return cls(length, lambda s: s * sin_a, lambda s: (s * cos_a, -s * sin_a), "straight")

    @classmethod
    def vertical(cls, height: float) -> "RampPath":
        return cls(height, lambda s: s, lambda s: (0.0, -s), "vertical")

    @classmethod
    def circular_arc(cls, radius: float, sweep: float = math.pi / 2) -> "RampPath":
        """Arc leaving the start vertically downward and turning toward horizontal."""
        if not (radius > 0 and 0 < sweep <= math.pi / 2):
            raise DomainError("circular ramp needs radius > 0 and 0 < sweep <= pi/2")
        return cls(
            radius * sweep,
            lambda s: radius * math.sin(s / radius),
            lambda s: (radius * (1.0 - math.cos(s / radius)), -radius * math.sin(s / radius)),
            "circular-arc",
        )

    @classmethod
    def polyline(cls, points: Sequence[tuple[float, float]]) -> "RampPath":
        pts = np.asarray(points, dtype=float)
        seg = np.hypot(np.diff(pts[:, 0]), np.diff(pts[:, 1]))
        if np.any(seg <= 0):
            raise DomainError("polyline vertices must be distinct")
        knots = np.concatenate([[0.0], np.cumsum(seg)])
        y0 = pts[0, 1]
        xs, ys = pts[:, 0] - pts[0, 0], pts[:, 1] - y0

        def point(s):
            return (float(np.interp(s, knots, xs)), float(np.interp(s, knots, ys)))

        return cls(float(knots[-1]), lambda s: -float(np.interp(s, knots, ys)), point, "polyline")


def _check_starts(path: RampPath) -> None:
    for k in range(1, 41):
        s = path.length * 2.0 ** (-k)
        if path.drop(s) <= 0.0:
            raise NonStartingError(
                f"path has zero drop at s={s!r}; a body released at rest never starts"
            )


def ramp_descent_time(path: RampPath, c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Frictionless descent time from rest: integral of ds / sqrt(2 g drop(s))."""
    _check_starts(path)
    two_g = 2.0 * c.g
    return quad(lambda s: 1.0 / math.sqrt(two_g * path.drop(s)), (0.0, path.length), _QUAD_TOL)


def ramp_profile(
    path: RampPath, c: PhysicalConstants = DEFAULT_CONSTANTS, *, samples: int = 401
) -> MotionProfile:
    """Sampled speed-versus-time record of a descent, nodes clustered at release."""
    _check_starts(path)
    two_g = 2.0 * c.g
    inv_speed = lambda s: 1.0 / math.sqrt(two_g * path.drop(s))
    nodes = [path.length * (i / (samples - 1)) ** 2 for i in range(samples)]
    times = [0.0]
    for s0, s1 in zip(nodes, nodes[1:]):
        times.append(times[-1] + quad(inv_speed, (s0, s1), _QUAD_TOL))
    speeds = [math.sqrt(two_g * path.drop(s)) for s in nodes]
    speeds[0] = 0.0
    return MotionProfile.sampled(times, speeds)


# ---------------------------------------------------------------- pendulum


def agm(a: float, b: float) -> float:
    while abs(a - b) > 1e-15 * abs(a):
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def pendulum_period_elliptic(length: float, amplitude: float, c: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Closed-form period 4 sqrt(L/g) K(sin(amplitude/2)), K via the AGM."""
    if not 0 < amplitude < math.pi:
        raise DomainError("amplitude must lie in (0, pi)")
    k = math.sin(0.5 * amplitude)
    big_k = math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - k * k)))
    return 4.0 * math.sqrt(length / c.g) * big_k


def _hermite_root(t0, t1, y0, y1, d0, d1) -> float:
    h = t1 - t0

    def p(t):
        s = (t - t0) / h
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s * s * (3 - 2 * s)
        h11 = s * s * (s - 1)
        return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1

    return find_root(p, (t0, t1), Tolerance(1e-15, 1e-14))


def pendulum_period(
    length: float,
    amplitude: float,
    c: PhysicalConstants = DEFAULT_CONSTANTS,
    *,
    tol: Tolerance = Tolerance(1e-15, 1e-12),
) -> float:
    """Period of the undamped pendulum by direct integration of the equation of
    motion over a quarter swing (release at rest to the first crossing of the
    vertical), times four."""
    if not length > 0:
        raise DomainError("length must be positive")
    if not 0 < amplitude < math.pi:
        raise DomainError("amplitude must lie in (0, pi); pi is the inverted equilibrium")
    w2 = c.g / length

    def rhs(t, y):
        return (y[1], -w2 * math.sin(y[0]))

    chunk = 0.5 * math.pi / math.sqrt(w2)
    t0, state = 0.0, (amplitude, 0.0)
    for _ in range(10_000):
        tr = integrate_ode(state, rhs, (t0, t0 + chunk), tol, min_steps=64)
        th = tr.y[:, 0]
        idx = np.nonzero(th <= 0.0)[0]
        if idx.size:
            i = int(idx[0])
            if th[i] == 0.0:
                return 4.0 * float(tr.t[i])
            ya, yb = tr.y[i - 1], tr.y[i]
            da = rhs(0, ya)[0]
            db = rhs(0, yb)[0]
            return 4.0 * _hermite_root(float(tr.t[i - 1]), float(tr.t[i]), ya[0], yb[0], da, db)
        t0, state = float(tr.t[-1]), tuple(tr.y[-1])
    raise DomainError("pendulum did not reach the vertical")  # pragma: no cover


# ---------------------------------------------------------------- projectiles


@dataclass(frozen=True)
class ProjectileResult:
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    vx: np.ndarray
    vy: np.ndarray
    is_parabola: bool
    axis_tilt: float  # rad from vertical, signed
    fit_residual: float
    apex_horizontal_speed: float | None

    def rows(self):
        return [(float(a), float(b), float(c)) for a, b, c in zip(self.t, self.x, self.y)]


def fit_conic(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, float]:
    """Least-squares conic ``A x^2 + B xy + C y^2 + D x + E y + F = 0``.

    Returns the unit coefficient vector and the relative residual
    sigma_min / sigma_max of the (scale-normalized) design matrix.
    """
    scale = max(float(np.max(np.abs(x))), float(np.max(np.abs(y))), 1e-300)
    xs, ys = x / scale, y / scale
    design = np.column_stack([xs * xs, xs * ys, ys * ys, xs, ys, np.ones_like(xs)])
    _, sv, vt = np.linalg.svd(design)
    return vt[-1], float(sv[-1] / sv[0])


def _parabola_axis_tilt(coeffs: np.ndarray) -> tuple[bool, float]:
    a, b, cc = coeffs[0], coeffs[1], coeffs[2]
    quad_norm = math.sqrt(a * a + 0.5 * b * b + cc * cc)
    if quad_norm < 1e-12:
        return False, math.nan  # degenerate: a straight line
    disc = (b * b - 4.0 * a * cc) / (quad_norm * quad_norm)
    form = np.array([[a, 0.5 * b], [0.5 * b, cc]])
    vals, vecs = np.linalg.eigh(form)
    axis = vecs[:, int(np.argmin(np.abs(vals)))]
    tilt = math.atan2(axis[0], axis[1])
    if tilt > math.pi / 2:
        tilt -= math.pi
    elif tilt <= -math.pi / 2:
        tilt += math.pi
    return abs(disc) < 1e-9, tilt


def projectile_trajectory(
    v0: float,
    angle: float,
    c: PhysicalConstants = DEFAULT_CONSTANTS,
    *,
    model: Literal["inertial-composition", "incline-deceleration"] = "inertial-composition",
    deceleration: float = 0.0,
    samples: int = 41,
) -> ProjectileResult:
    """Trajectory under one of two composition rules, with a conic fit.

    ``inertial-composition`` keeps uniform speed along the firing direction
    and adds free fall. ``incline-deceleration`` instead decelerates along the
    firing direction at ``deceleration`` m/s^2, as a ball rolling up an
    incline would.
    """
    if not v0 > 0:
        raise DomainError("v0 must be positive")
    if not -math.pi / 2 < angle <= math.pi / 2:
        raise DomainError("angle must lie in (-pi/2, pi/2]")
    if samples < 7:
        raise DomainError("need at least 7 samples for a conic fit")
    ca, sa = math.cos(angle), math.sin(angle)
    rate = 0.0
    if model == "incline-deceleration":
        if not deceleration > 0:
            raise DomainError("incline-deceleration model needs a positive deceleration")
        rate = deceleration
    elif model != "inertial-composition":
        raise DomainError(f"unknown projectile model {model!r}")
    ax, ay = -rate * ca, -rate * sa - c.g
    flight = 2.0 * v0 * sa / -ay if sa > 0 else 2.0 * v0 / c.g
    if rate > 0:
        flight = min(flight, v0 / rate)
    t = np.linspace(0.0, flight, samples)
    x = v0 * ca * t + 0.5 * ax * t * t
    y = v0 * sa * t + 0.5 * ay * t * t
    vx = v0 * ca + ax * t
    vy = v0 * sa + ay * t
    coeffs, residual = fit_conic(x, y)
    is_par, tilt = _parabola_axis_tilt(coeffs)
    is_par = is_par and residual < 1e-9
    apex = None
    if sa > 0:
        t_apex = v0 * sa / -ay
        apex = v0 * ca + ax * t_apex
    return ProjectileResult(t, x, y, vx, vy, is_par, tilt, residual, apex)


def range_table(
    v0: float, angles: Sequence[float], c: PhysicalConstants = DEFAULT_CONSTANTS
) -> list[tuple[float, float]]:
    """Rows ``(angle_deg, range_m)`` of the level-ground range v0^2 sin(2a)/g."""
    rows = []
    for a in angles:
        if not 0 < a < math.pi / 2:
            raise DomainError("range-table angles must lie in (0, pi/2)")
        rows.append((math.degrees(a), v0 * v0 * math.sin(2.0 * a) / c.g))
    return rows
