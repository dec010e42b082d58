"""Phases and apparent size of Venus from two coplanar circular orbits.

Time is measured in days from an anchor date on which Venus shows exactly
half its disc, taken on the branch leading to inferior conjunction.
"""

from __future__ import annotations

import datetime as _dt
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, WindowError
from .kernels import Tolerance, find_root

GRID_STEP = 21.0  # days
GRID_OFFSETS = tuple(GRID_STEP * k for k in range(-5, 3))  # -105 .. +42


@dataclass(frozen=True)
class PhaseModel:
    r_venus: float = 0.723  # AU
    r_earth: float = 1.0  # AU
    T_venus: float = 224.7  # day
    T_earth: float = 365.25  # day
    anchor: _dt.date = field(default=_dt.date(1610, 12, 18))

    def __post_init__(self):
        if not 0 < self.r_venus < self.r_earth:
            raise DomainError("need 0 < r_venus < r_earth")
        if not (self.T_venus > 0 and self.T_earth > self.T_venus):
            raise DomainError("need 0 < T_venus < T_earth")

    @property
    def synodic_period(self) -> float:
        return 1.0 / (1.0 / self.T_venus - 1.0 / self.T_earth)

    @property
    def anchor_lag(self) -> float:
        """Heliocentric angle by which Venus trails the Earth at the anchor."""
        return math.acos(self.r_venus / self.r_earth)

    @property
    def inferior_conjunction(self) -> float:
        """Day offset of the first inferior conjunction after the anchor."""
        return self.anchor_lag / (2.0 * math.pi) * self.synodic_period

    @property
    def superior_conjunction(self) -> float:
        """Day offset of the superior conjunction preceding the anchor."""
        return self.inferior_conjunction - 0.5 * self.synodic_period

    def date_of(self, offset: float) -> _dt.date:
        return self.anchor + _dt.timedelta(days=round(offset))


@dataclass(frozen=True)
class PhaseSample:
    date_offset: float  # day
    alpha: float  # rad
    k: float
    diameter_ratio: float
    elongation: float  # rad

    def row(self):
        return (self.date_offset, math.degrees(self.alpha), self.k, self.diameter_ratio, math.degrees(self.elongation))


def _triangle(model: PhaseModel, delta: float):
    """(cos alpha, alpha, elongation, distance) for heliocentric separation
    ``delta`` (Venus minus Earth longitude, in [-pi, pi])."""
    rv, re = model.r_venus, model.r_earth
    sd = abs(math.sin(delta))
    along = re - rv * math.cos(delta)
    dist = math.hypot(rv * sd, along)
    elong = math.atan2(rv * sd, along)
    cos_alpha = (rv - re * math.cos(delta)) / dist
    return cos_alpha, math.pi - abs(delta) - elong, elong, dist


def _delta(model: PhaseModel, offset: float) -> float:
    return math.remainder(-model.anchor_lag + 2.0 * math.pi * offset / model.synodic_period, 2.0 * math.pi)


def _sample(model: PhaseModel, offset: float, delta: float, d_anchor: float) -> PhaseSample:
    cos_alpha, alpha, elong, dist = _triangle(model, delta)
    k = 0.5 * (1.0 + max(-1.0, min(1.0, cos_alpha)))
    return PhaseSample(offset, alpha, k, d_anchor / dist, elong)


def _anchor_distance(model: PhaseModel) -> float:
    return _triangle(model, -model.anchor_lag)[3]


def phase_at_separation(model: PhaseModel, delta: float) -> PhaseSample:
    """Sample at a given heliocentric separation; delta = 0 is inferior and
    delta = pi superior conjunction. ``date_offset`` is left as NaN."""
    return _sample(model, math.nan, delta, _anchor_distance(model))


def simulate(model: PhaseModel, dates) -> list[PhaseSample]:
    """Phase samples at day offsets from the anchor."""
    d_anchor = _anchor_distance(model)
    out = []
    for t in dates:
        t = float(t)
        if not math.isfinite(t):
            raise DomainError("dates must be finite")
        out.append(_sample(model, t, _delta(model, t), d_anchor))
    return out


def illuminated_fraction(model: PhaseModel, offset: float) -> float:
    return simulate(model, [offset])[0].k


def k_crossing(model: PhaseModel, level: float) -> float:
    """Day offset at which k falls through ``level`` between superior and
    inferior conjunction, where k decreases monotonically from 1 to 0."""
    lo, hi = model.superior_conjunction, model.inferior_conjunction
    if not 0.0 < level < 1.0:
        raise WindowError(f"k = {level!r} is never crossed between conjunctions")
    return find_root(lambda t: illuminated_fraction(model, t) - level, (lo, hi), Tolerance(1e-10, 1e-13))


@dataclass(frozen=True)
class NonlinearityProfile:
    days_gibbous_to_near_half: float  # k 0.75 -> 0.55
    days_lingering_near_half: float  # k 0.55 -> 0.45
    crossings: tuple[float, float, float]

    @property
    def lingering_reproduced(self) -> bool:
        return self.days_gibbous_to_near_half < self.days_lingering_near_half


def nonlinearity_profile(model: PhaseModel, levels: tuple[float, float, float] = (0.75, 0.55, 0.45)) -> NonlinearityProfile:
    """Days spent between successive illuminated-fraction levels while Venus
    wanes toward inferior conjunction."""
    hi, mid, lo = levels
    if not hi >= mid >= lo:
        raise DomainError("levels must be non-increasing")
    t = tuple(k_crossing(model, x) for x in levels)
    return NonlinearityProfile(t[1] - t[0], t[2] - t[1], t)


@dataclass(frozen=True)
class TabletopReport:
    scale_ratio: float
    model_ratio: float
    scale_rel_error: float
    valid: bool
    max_k_difference: float
    comparisons: tuple[tuple[float, float, float, float], ...]  # offset, angle deg, k table, k model


def tabletop_equivalence(model: PhaseModel, lamp_distance: float = 4.34, orbit_radius: float = 6.0, offsets=GRID_OFFSETS) -> TabletopReport:
    """Compare a tabletop rig with the simulation.

    The lamp stands for the Sun, the ball circles it at ``lamp_distance`` and
    the camera at ``orbit_radius``; a protractor sets the separation angle
    that the simulation reaches on each grid date.
    """
    if not (lamp_distance > 0 and orbit_radius > 0):
        raise DomainError("lengths must be positive")
    ratio = lamp_distance / orbit_radius
    target = model.r_venus / model.r_earth
    rel = abs(ratio - target) / target
    # the rig must be a proper inner orbit and must reproduce the orbit ratio to 1%
    geometric = ratio < 1.0
    valid = geometric and rel <= 1e-2
    rows, worst = [], 0.0
    if geometric:
        rig = PhaseModel(lamp_distance, orbit_radius, model.T_venus, model.T_earth, model.anchor)
        for s in simulate(model, offsets):
            delta = _delta(model, s.date_offset)
            k_table = phase_at_separation(rig, delta).k
            worst = max(worst, abs(k_table - s.k))
            rows.append((s.date_offset, math.degrees(delta), k_table, s.k))
    return TabletopReport(ratio, target, rel, valid, worst, tuple(rows))


def grid_samples(model: PhaseModel, offsets=GRID_OFFSETS) -> list[PhaseSample]:
    return simulate(model, offsets)


def synodic_repeat_error(model: PhaseModel, offsets=GRID_OFFSETS, cycles: int = 1) -> float:
    shift = cycles * model.synodic_period
    a = simulate(model, offsets)
    b = simulate(model, np.asarray(offsets, dtype=float) + shift)
    return max(abs(x.k - y.k) for x, y in zip(a, b))


__all__ = [
    "GRID_STEP",
    "GRID_OFFSETS",
    "PhaseModel",
    "PhaseSample",
    "phase_at_separation",
    "simulate",
    "illuminated_fraction",
    "k_crossing",
    "NonlinearityProfile",
    "nonlinearity_profile",
    "TabletopReport",
    "tabletop_equivalence",
    "grid_samples",
    "synodic_repeat_error",
]
