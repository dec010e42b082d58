"""Aristarchus's half-moon geometry and the statistics of averaging many
crude observations; Hipparchus's count of compound statements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NumericError
from .kernels import mean_ci

HOURS_PER_DEGREE = 2.0  # the Moon moves about half a degree per hour against the Sun
MAX_BRACKETING_N = 12
BRUTE_FORCE_MAX_N = 6


@dataclass(frozen=True)
class DichotomyObservation:
    angle: float  # rad, Moon-Earth-Sun elongation at half moon

    def __post_init__(self):
        if not 0 < self.angle < math.pi / 2:
            raise DomainError("elongation must lie strictly between 0 and pi/2")


def sun_moon_distance_ratio(obs: DichotomyObservation) -> float:
    """Sun distance over Moon distance: the right angle sits at the Moon, so
    the ratio is sec(angle)."""
    c = math.cos(obs.angle)
    ratio = 1.0 / c
    if not math.isfinite(ratio) or ratio > 1e15:
        raise NumericError("ratio is unbounded as the angle approaches a right angle")
    return ratio


def angle_for_ratio(ratio: float) -> float:
    if not ratio > 1:
        raise DomainError("a distance ratio above one is required")
    return math.acos(1.0 / ratio)


@dataclass(frozen=True)
class DichotomyCI:
    sigma_deg: float
    n: int
    half_width_deg: float
    bias_deg: float
    detectable: bool


def dichotomy_ci(
    sigma_hours: float = 12.0,
    observations_per_year: float = 25.0,
    years: float = 20.0,
    confidence: float = 0.95,
    *,
    measured_deg: float = 87.0,
    true_deg: float = 89.853,
) -> DichotomyCI:
    """Half-width of the confidence interval on the mean half-moon elongation.

    A timing error converts to an angle at half a degree per hour. The
    measured value is detectably biased when the gap to the true value
    exceeds the half-width.
    """
    if not (sigma_hours > 0 and observations_per_year > 0 and years > 0):
        raise DomainError("inputs must be positive")
    n = int(round(observations_per_year * years))
    if n < 1:
        raise DomainError("at least one observation is required")
    sigma = sigma_hours / HOURS_PER_DEGREE
    half = mean_ci(sigma, n, confidence)
    bias = true_deg - measured_deg
    return DichotomyCI(sigma, n, half, bias, bias > half)


def volume_ratio_from_diameter(d_ratio: float) -> float:
    if not d_ratio > 0:
        raise DomainError("diameter ratio must be positive")
    return d_ratio**3


def diameter_ratio_from_volume(v_ratio: float) -> float:
    if not v_ratio > 0:
        raise DomainError("volume ratio must be positive")
    return v_ratio ** (1.0 / 3.0)


@dataclass(frozen=True)
class BracketingProblem:
    n: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and 1 <= self.n <= MAX_BRACKETING_N):
            raise DomainError(f"n must be an integer in [1, {MAX_BRACKETING_N}]")


def schroeder_count(p: BracketingProblem) -> int:
    """Little Schroeder number s(n): plane trees with n leaves and no unary
    nodes, from (k+1) s(k+1) = 3 (2k-1) s(k) - (k-2) s(k-1)."""
    s = [0, 1, 1]
    for k in range(2, p.n):
        num = 3 * (2 * k - 1) * s[k] - (k - 2) * s[k - 1]
        nxt, rem = divmod(num, k + 1)
        if rem:
            raise NumericError("recurrence lost integrality")
        s.append(nxt)
    value = s[p.n]
    if value >= 2**63:
        raise NumericError("count exceeds 64-bit range")
    return value


@lru_cache(maxsize=None)
def _bracketings(lo: int, hi: int) -> frozenset[str]:
    """All bracketings of items lo..hi-1 as strings; a group holds at least two parts."""
    if hi - lo == 1:
        return frozenset({chr(ord("a") + lo)})
    out = set()
    for parts in _splits(lo, hi):
        pieces = [_bracketings(a, b) for a, b in parts]
        combos = [""]
        for choice in pieces:
            combos = [c + x for c in combos for x in choice]
        out.update("(" + c + ")" for c in combos)
    return frozenset(out)


def _splits(lo: int, hi: int):
    """Ways to cut [lo, hi) into two or more consecutive non-empty runs."""
    cuts = list(range(lo + 1, hi))
    for mask in range(1, 1 << len(cuts)):
        bounds = [lo] + [c for i, c in enumerate(cuts) if mask >> i & 1] + [hi]
        yield list(zip(bounds, bounds[1:]))


def brute_force(p: BracketingProblem) -> int:
    """Enumerate the distinct bracketed strings outright (n <= 6)."""
    if p.n > BRUTE_FORCE_MAX_N:
        raise DomainError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    return len(_bracketings(0, p.n))


def schroeder_table(n_max: int = MAX_BRACKETING_N) -> list[tuple[int, int]]:
    return [(n, schroeder_count(BracketingProblem(n))) for n in range(1, n_max + 1)]


__all__ = [
    "HOURS_PER_DEGREE",
    "DichotomyObservation",
    "sun_moon_distance_ratio",
    "angle_for_ratio",
    "DichotomyCI",
    "dichotomy_ci",
    "volume_ratio_from_diameter",
    "diameter_ratio_from_volume",
    "BracketingProblem",
    "schroeder_count",
    "brute_force",
    "schroeder_table",
]
