"""Floating bodies: a prism in a finite container, the wreath density test,
and the upright stability of a floating solid paraboloid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import DomainError, GroundedError, NonphysicalError
from .kernels import Tolerance, find_root

WATER_DENSITY = 1000.0  # kg/m^3
MATERIALS: dict[str, float] = {"gold": 19300.0, "silver": 10500.0}
MATERIAL_TOLERANCE = 0.02


# ---------------------------------------------------------------- prism in a container


@dataclass(frozen=True)
class FloatingPrism:
    cross_section: float  # m^2
    height: float  # m
    density_ratio: float

    def __post_init__(self):
        if not (self.cross_section > 0 and self.height > 0):
            raise DomainError("prism geometry must be positive")
        if not 0 < self.density_ratio < 1:
            raise DomainError("density ratio must lie in (0, 1) for the body to float")


@dataclass(frozen=True)
class Container:
    cross_section: float  # m^2
    water_volume: float  # m^3

    def __post_init__(self):
        if not self.cross_section > 0:
            raise DomainError("container cross-section must be positive")
        if self.water_volume < 0:
            raise DomainError("water volume must be non-negative")


@dataclass(frozen=True)
class Equilibrium:
    draft: float
    initial_level: float
    new_level: float
    water_mass: float
    body_mass: float
    submerged_volume: float
    displaced_below_initial_level: float
    buoyant_force: float
    weight: float


def minimum_water(body: FloatingPrism, container: Container) -> float:
    """Least water volume that lets the body float clear of the bottom."""
    return (container.cross_section - body.cross_section) * body.density_ratio * body.height


def float_equilibrium(
    body: FloatingPrism,
    container: Container,
    c: PhysicalConstants = DEFAULT_CONSTANTS,
    fluid_density: float = WATER_DENSITY,
) -> Equilibrium:
    a, A = body.cross_section, container.cross_section
    if not A > a:
        raise DomainError("container must be wider than the body")
    d = body.density_ratio * body.height
    w = container.water_volume
    need = minimum_water(body, container)
    if w < need:
        raise GroundedError(f"body grounds: at least {need!r} m^3 of water is needed", need)
    level = (w + a * d) / A
    submerged = a * d
    below_initial = a * d * (1.0 - a / A)
    body_mass = body.density_ratio * fluid_density * a * body.height
    return Equilibrium(
        draft=d,
        initial_level=w / A,
        new_level=level,
        water_mass=fluid_density * w,
        body_mass=body_mass,
        submerged_volume=submerged,
        displaced_below_initial_level=below_initial,
        buoyant_force=fluid_density * c.g * submerged,
        weight=body_mass * c.g,
    )


# ---------------------------------------------------------------- wreath


@dataclass(frozen=True)
class DensityResult:
    density: float
    classification: str  # "consistent-with <material>" or "alloy"


def wreath_density(weight_air: float, weight_water: float, fluid_density: float = WATER_DENSITY, materials: dict[str, float] | None = None) -> DensityResult:
    """Density from the weight in air and the apparent weight when submerged."""
    if not weight_water > 0:
        raise NonphysicalError("submerged weight must be positive")
    if not weight_air > weight_water:
        raise NonphysicalError("submerged weight must be less than the weight in air")
    rho = weight_air / (weight_air - weight_water) * fluid_density
    table = MATERIALS if materials is None else materials
    label = "alloy"
    for name, ref in sorted(table.items()):
        if abs(rho - ref) <= MATERIAL_TOLERANCE * ref:
            label = f"consistent-with {name}"
            break
    return DensityResult(rho, label)


def weighings(density: float, mass: float, fluid_density: float = WATER_DENSITY, c: PhysicalConstants = DEFAULT_CONSTANTS) -> tuple[float, float]:
    """Forward model: (weight in air, apparent weight in fluid) in newtons."""
    if not density > fluid_density:
        raise NonphysicalError("body must be denser than the fluid to sink")
    w = mass * c.g
    return w, w * (1.0 - fluid_density / density)


def mixture_density(fractions: dict[str, float], materials: dict[str, float] | None = None) -> float:
    """Density of a mixture given mass fractions."""
    table = MATERIALS if materials is None else materials
    total = sum(fractions.values())
    return total / sum(frac / table[name] for name, frac in fractions.items())


# ---------------------------------------------------------------- paraboloid


@dataclass(frozen=True)
class Paraboloid:
    """Solid of revolution z = r^2 / (4 f), vertex down, cut flat at z = H."""

    focal: float
    height: float
    density_ratio: float

    def __post_init__(self):
        if not (self.focal > 0 and self.height > 0):
            raise DomainError("focal length and height must be positive")
        if not 0 < self.density_ratio < 1:
            raise DomainError("density ratio must lie in (0, 1)")

    @property
    def volume(self) -> float:
        return 2.0 * math.pi * self.focal * self.height**2

    @property
    def draft(self) -> float:
        return self.height * math.sqrt(self.density_ratio)


@dataclass(frozen=True)
class StabilityResult:
    metacentric_height: float
    stable: bool
    critical_height: float


def critical_height(focal: float, density_ratio: float) -> float:
    return 3.0 * focal / (1.0 - math.sqrt(density_ratio))


def paraboloid_upright_stability(p: Paraboloid) -> StabilityResult:
    d = p.draft
    gm = 2.0 * d / 3.0 + 2.0 * p.focal - 2.0 * p.height / 3.0
    return StabilityResult(gm, gm > 0, critical_height(p.focal, p.density_ratio))


_GL_T, _GL_W = np.polynomial.legendre.leggauss(96)


def _slab_integrals(x0: float, rho: float, t_lo: float, t_hi: float, f: float):
    """Integrate volume, x-moment and z-moment over x = x0 + rho sin t.

    For each x the y-extent is |y| <= Y with Y = rho cos t, and the column
    runs from the paraboloid to a flat top; the y integrals are done in
    closed form.
    """
    if t_hi <= t_lo:
        return 0.0, 0.0, 0.0
    half = 0.5 * (t_hi - t_lo)
    t = t_lo + half * (_GL_T + 1.0)
    w = half * _GL_W
    x = x0 + rho * np.sin(t)
    Y = rho * np.cos(t)
    dx = rho * np.cos(t)
    q = x * x / (4.0 * f)
    Y3 = Y**3
    vol = Y3 / (3.0 * f)
    zmom = q * Y3 / (3.0 * f) + Y**5 / (20.0 * f * f)
    return float(np.sum(w * vol * dx)), float(np.sum(w * x * vol * dx)), float(np.sum(w * zmom * dx))


def _submerged(p: Paraboloid, c: float, m: float):
    """(volume, x-moment, z-moment) of the body below z = c + m x, m >= 0."""
    f, H = p.focal, p.height
    R = math.sqrt(4.0 * f * H)
    x0 = 2.0 * f * m
    disc = x0 * x0 + 4.0 * f * c
    if disc <= 0:
        return 0.0, 0.0, 0.0
    rho = math.sqrt(disc)
    x_hi = x0 + rho
    if m > 0:
        xk = (H - c) / m
    else:
        xk = math.inf if c < H else -math.inf
    # part under the tilted plane
    a_end = min(xk, x_hi)
    t_a = math.asin(max(-1.0, min(1.0, (a_end - x0) / rho)))
    v1 = _slab_integrals(x0, rho, -0.5 * math.pi, t_a, f)
    # part where the flat top is submerged
    v2 = (0.0, 0.0, 0.0)
    if xk < x_hi:
        lo = max(xk, -R)
        t_b = math.asin(max(-1.0, min(1.0, lo / R)))
        v2 = _slab_integrals(0.0, R, t_b, 0.5 * math.pi, f)
    return tuple(a + b for a, b in zip(v1, v2))


def tilted_energy(p: Paraboloid, phi: float) -> float:
    """Potential energy per unit weight of the body heeled by ``phi``.

    The waterline is the plane z = c + x tan(phi) in body coordinates, with c
    solved so that the displaced volume equals s times the body volume. The
    energy is the height of the centre of gravity above the centre of
    buoyancy, measured along the true vertical.
    """
    m = math.tan(phi)
    f, H = p.focal, p.height
    target = p.density_ratio * p.volume
    c_lo = -f * m * m
    c_hi = H + m * math.sqrt(4.0 * f * H)
    c = find_root(lambda c: _submerged(p, c, m)[0] - target, (c_lo, c_hi), Tolerance(1e-15, 1e-15))
    vol, mx, mz = _submerged(p, c, m)
    bx, bz = mx / vol, mz / vol
    gz = 2.0 * H / 3.0
    # (G - B) . n with G = (0, 0, gz) and n = (-sin phi, 0, cos phi)
    return math.sin(phi) * bx + math.cos(phi) * (gz - bz)


SCAN_ANGLES = tuple(math.radians(5.0) * 2.0 ** (-j) for j in range(0, 8))


def energy_scan_stable(p: Paraboloid, angles=SCAN_ANGLES) -> bool:
    """Oracle: upright is stable iff every heeled energy exceeds the upright one."""
    u0 = tilted_energy(p, 0.0)
    return all(tilted_energy(p, a) > u0 for a in angles)


STABILITY_GRID_H = tuple(float(x) for x in np.linspace(1.0, 20.0, 10))
STABILITY_GRID_S = tuple(float(x) for x in np.linspace(0.05, 0.95, 10))


def stability_grid(focal: float = 1.0, oracle: bool = True):
    """Rows (H/f, s, GM, stable[, oracle stable]) over the standard 10x10 grid."""
    rows = []
    for h in STABILITY_GRID_H:
        for s in STABILITY_GRID_S:
            p = Paraboloid(focal, h * focal, s)
            r = paraboloid_upright_stability(p)
            row = (h, s, r.metacentric_height, r.stable)
            if oracle:
                row += (energy_scan_stable(p),)
            rows.append(row)
    return rows


__all__ = [
    "WATER_DENSITY",
    "MATERIALS",
    "FloatingPrism",
    "Container",
    "Equilibrium",
    "minimum_water",
    "float_equilibrium",
    "DensityResult",
    "wreath_density",
    "weighings",
    "mixture_density",
    "Paraboloid",
    "StabilityResult",
    "critical_height",
    "paraboloid_upright_stability",
    "tilted_energy",
    "SCAN_ANGLES",
    "energy_scan_stable",
    "STABILITY_GRID_H",
    "STABILITY_GRID_S",
    "stability_grid",
]
