"""Physical constants shared by every engine.

A single frozen instance is passed explicitly to each operation; overrides
produce a new instance via :meth:`PhysicalConstants.with_overrides`.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError

DAY = 86400.0
HOUR = 3600.0
ARCMIN = math.pi / (180.0 * 60.0)
ARCSEC = ARCMIN / 60.0


@dataclass(frozen=True)
class PhysicalConstants:
    g: float = 9.8  # m/s^2
    G: float = 6.674e-11  # m^3/(kg s^2)
    M_sun: float = 1.989e30  # kg
    M_earth: float = 5.972e24  # kg
    M_moon: float = 7.342e22  # kg
    R_earth: float = 6.371e6  # m
    AU: float = 1.496e11  # m
    sidereal_day: float = 86164.0  # s
    lunar_sidereal_month: float = 27.32  # day
    moon_distance: float = 3.844e8  # m

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"constant {f.name} must be a positive finite number, got {value!r}")

    @classmethod
    def keys(cls) -> tuple[str, ...]:
        return tuple(f.name for f in dataclasses.fields(cls))

    def with_overrides(self, overrides: dict[str, float]) -> "PhysicalConstants":
        unknown = sorted(set(overrides) - set(self.keys()))
        if unknown:
            raise ConfigError(f"unknown constant(s): {', '.join(unknown)}")
        return dataclasses.replace(self, **{k: float(v) for k, v in overrides.items()})

    @property
    def mu_earth_moon(self) -> float:
        """Gravitational parameter of the Earth-Moon relative orbit."""
        return self.G * (self.M_earth + self.M_moon)

    @property
    def mu_sun(self) -> float:
        return self.G * self.M_sun


DEFAULT_CONSTANTS = PhysicalConstants()
