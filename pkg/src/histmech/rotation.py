"""Centrifugal extrusion from a spinning sphere and the inertial-frame path of
a body dropped from a tower on a rotating Earth.

Free fall inside the Earth keeps ``g`` constant, matching the historical
assumption under test rather than the true interior law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import DomainError
from .kinematics import fall_distance

EARTH_EQUATORIAL_SPEED = 465.1  # m/s
PATH_SAMPLES = 1024


@dataclass(frozen=True)
class RotatingBody:
    radius: float  # m
    surface_speed: float  # m/s
    g: float  # m/s^2

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError("radius must be positive")
        if not 0 <= self.surface_speed < 1e7:
            raise DomainError("surface speed must lie in [0, 1e7) m/s")
        if not self.g > 0:
            raise DomainError("g must be positive")

    @classmethod
    def earth(cls, c: PhysicalConstants = DEFAULT_CONSTANTS, spin_factor: float = 1.0) -> "RotatingBody":
        return cls(c.R_earth, EARTH_EQUATORIAL_SPEED * spin_factor, c.g)

    def scaled(self, k: float) -> "RotatingBody":
        """(R, V, g) -> (kR, sqrt(k) V, g), which leaves gR/V^2 unchanged."""
        return RotatingBody(k * self.radius, math.sqrt(k) * self.surface_speed, self.g)


def tangential_rise(t: float, body: RotatingBody) -> float:
    """Height above the surface after moving ``t`` seconds along the tangent.

    Evaluated as V^2 t^2 / (R + sqrt(R^2 - V^2 t^2)), which equals
    R - sqrt(R^2 - V^2 t^2) without the cancellation at small t.
    """
    if t < 0:
        raise DomainError("time must be non-negative")
    vt = body.surface_speed * t
    if vt >= body.radius:
        raise DomainError("tangent travel must stay shorter than the radius")
    r = body.radius
    return vt * vt / (r + math.sqrt((r - vt) * (r + vt)))


def extrusion_limit_ratio(body: RotatingBody) -> float:
    """Small-time limit of fall distance over tangential rise, gR/V^2.

    A body at rest (V = 0) never rises; that case returns ``math.inf``.
    """
    if body.surface_speed == 0:
        return math.inf
    return body.g * body.radius / body.surface_speed**2


def numeric_extrusion_ratio(body: RotatingBody, t: float | None = None) -> float:
    """d(t)/h(t) at a small time (default 1e-4 R/V), for comparison with the limit."""
    if body.surface_speed == 0:
        return math.inf
    if t is None:
        t = 1e-4 * body.radius / body.surface_speed
    return 0.5 * body.g * t * t / tangential_rise(t, body)


@dataclass(frozen=True)
class ExtrusionVerdict:
    verdict: str  # "retained" | "extruded"
    critical_speed: float
    limit_ratio: float


def extrusion_verdict(body: RotatingBody) -> ExtrusionVerdict:
    """Extruded iff gR/V^2 < 1. The tie V = sqrt(gR) is classified retained."""
    ratio = extrusion_limit_ratio(body)
    return ExtrusionVerdict(
        "extruded" if ratio < 1.0 else "retained",
        math.sqrt(body.g * body.radius),
        ratio,
    )


def catch_up_difference(t: float, body: RotatingBody, c: PhysicalConstants | None = None) -> float:
    """d(t) - h(t); positive once free fall has outpaced the tangential rise."""
    g = body.g if c is None else c.g
    return 0.5 * g * t * t - tangential_rise(t, body)


# ---------------------------------------------------------------- path of fall


@dataclass(frozen=True)
class FallPathSpec:
    r0: float  # m, release radius
    omega: float  # rad/s
    g: float  # m/s^2

    def __post_init__(self):
        if not (self.r0 > 0 and self.omega > 0 and self.g > 0):
            raise DomainError("r0, omega and g must all be positive")

    @property
    def spiral_coefficient(self) -> float:
        """a in r = r0 - a theta^2."""
        return self.g / (2.0 * self.omega**2)

    @property
    def theta_at_center(self) -> float:
        return self.omega * math.sqrt(2.0 * self.r0 / self.g)

    @classmethod
    def tower(cls, height: float = 100.0, c: PhysicalConstants = DEFAULT_CONSTANTS) -> "FallPathSpec":
        return cls(c.R_earth + height, 2.0 * math.pi / c.sidereal_day, c.g)


@dataclass(frozen=True)
class FallPath:
    theta: np.ndarray
    r: np.ndarray
    x: np.ndarray
    y: np.ndarray
    spiral_dev: float
    semicircle_dev: float
    truncated: bool

    def rows(self):
        r0 = float(self.r[0])
        return [
            (float(th), float(r), r0 * math.cos(float(th)))
            for th, r in zip(self.theta, self.r)
        ]


def path_of_fall(spec: FallPathSpec, theta_max: float | None = None, samples: int = PATH_SAMPLES) -> FallPath:
    """Compose uniform rotation with uniformly accelerated radial fall.

    Samples are taken uniformly in time (hence in angle). The composed radius
    is compared against the closed-form spiral ``r0 - a theta^2`` and against
    the semicircle ``r = r0 cos(theta)`` whose diameter joins the release
    point to the centre. If the centre is reached before ``theta_max`` the
    path stops at the first sample with ``r <= 0`` and ``truncated`` is set.
    """
    theta_end = spec.theta_at_center
    if theta_max is None:
        theta_max = theta_end
    if not theta_max > 0:
        raise DomainError("theta_max must be positive")
    t = np.linspace(0.0, theta_max / spec.omega, samples)
    theta = spec.omega * t
    r = spec.r0 - 0.5 * spec.g * t * t
    truncated = False
    below = np.nonzero(r <= 0.0)[0]
    if below.size and theta_max > theta_end:
        cut = int(below[0]) + 1
        theta, r, truncated = theta[:cut], r[:cut], True
    x, y = r * np.cos(theta), r * np.sin(theta)
    spiral = spec.r0 - spec.spiral_coefficient * theta * theta
    spiral_dev = float(np.max(np.abs(r - spiral)))
    semicircle = spec.r0 * np.cos(theta)
    semicircle_dev = float(np.max(np.abs(r - semicircle)))
    return FallPath(theta, r, x, y, spiral_dev, semicircle_dev, truncated)


__all__ = [
    "EARTH_EQUATORIAL_SPEED",
    "RotatingBody",
    "tangential_rise",
    "extrusion_limit_ratio",
    "numeric_extrusion_ratio",
    "ExtrusionVerdict",
    "extrusion_verdict",
    "catch_up_difference",
    "FallPathSpec",
    "FallPath",
    "path_of_fall",
    "fall_distance",
]
