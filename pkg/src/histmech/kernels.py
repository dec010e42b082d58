"""Deterministic numerical primitives: quadrature, ODE integration, root
finding and the normal-theory confidence half-width.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BracketError, ConvergenceError, DomainError, SingularityError

__all__ = [
    "Tolerance",
    "Interval",
    "Trajectory",
    "quad",
    "integrate_ode",
    "rk4",
    "find_root",
    "normal_quantile",
    "mean_ci",
]


@dataclass(frozen=True)
class Tolerance:
    abs: float = 0.0
    rel: float = 0.0

    def __post_init__(self):
        if not (self.abs >= 0 and self.rel >= 0):
            raise DomainError(f"tolerance components must be non-negative: {self}")
        if self.abs == 0 and self.rel == 0:
            raise DomainError("tolerance must have a non-zero absolute or relative part")

    def bound(self, scale: float) -> float:
        return max(self.abs, self.rel * abs(scale))

    def accepts(self, value: float, target: float) -> bool:
        return abs(value - target) <= self.bound(target)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise DomainError(f"interval bounds out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _as_interval(span) -> Interval:
    return span if isinstance(span, Interval) else Interval(*span)


# ---------------------------------------------------------------- quadrature

_QUAD_MAX_DEPTH = 48
_QUAD_MAX_EVALS = 2_000_000
_QUAD_INITIAL_PANELS = 8


def _smoothstep(u: float) -> tuple[float, float]:
    return u * u * (3.0 - 2.0 * u), 6.0 * u * (1.0 - u)


def quad(
    f: Callable[[float], float],
    interval,
    tol: Tolerance = Tolerance(1e-10, 1e-10),
    *,
    endpoint_transform: bool = True,
) -> float:
    """Adaptive Simpson quadrature of ``f`` over ``interval``.

    The integration variable is pushed through a doubled cubic smoothstep, so
    the transformed integrand vanishes at both ends like ``u**3``. That turns
    endpoint singularities of the ``1/sqrt`` kind into smooth zeros and lets
    the same rule handle ordinary and singular integrands. ``f`` is never
    evaluated exactly at an endpoint unless its Jacobian weight is non-zero.

    Raises ConvergenceError (carrying the best estimate and the unresolved
    residual) when the subdivision budget is exhausted.
    """
    iv = _as_interval(interval)
    lo, width = iv.lo, iv.width
    if width == 0.0:
        return 0.0

    evals = 0

    def g(u: float) -> float:
        nonlocal evals
        evals += 1
        if not endpoint_transform:
            return f(lo + width * u) * width
        v, dv = _smoothstep(u)
        w, dw = _smoothstep(v)
        jac = width * dw * dv
        if jac == 0.0:
            return 0.0
        x = lo + width * w
        fx = f(x)
        if not math.isfinite(fx):
            if x <= lo or x >= lo + width:
                return 0.0
            raise ConvergenceError(f"integrand not finite at x={x!r}", math.nan, math.inf)
        return fx * jac

    edges = [i / _QUAD_INITIAL_PANELS for i in range(_QUAD_INITIAL_PANELS + 1)]
    edge_vals = [g(u) for u in edges]
    panels = []
    coarse = 0.0
    for i, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        m = 0.5 * (a + b)
        fa, fm, fb = edge_vals[i], g(m), edge_vals[i + 1]
        s = (b - a) * (fa + 4.0 * fm + fb) / 6.0
        coarse += s
        panels.append((a, b, fa, fm, fb, s))

    eps = tol.bound(coarse)
    unresolved = 0.0
    residual = 0.0

    def refine(a, b, fa, fm, fb, whole, eps_local, depth):
        nonlocal unresolved, residual
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = g(lm), g(rm)
        left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
        right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
        delta = left + right - whole
        if abs(delta) <= 15.0 * eps_local:
            residual += abs(delta) / 15.0
            return left + right + delta / 15.0
        if depth >= _QUAD_MAX_DEPTH or evals > _QUAD_MAX_EVALS:
            unresolved += abs(delta) / 15.0
            return left + right + delta / 15.0
        return refine(a, m, fa, flm, fm, left, 0.5 * eps_local, depth + 1) + refine(
            m, b, fm, frm, fb, right, 0.5 * eps_local, depth + 1
        )

    total = 0.0
    for a, b, fa, fm, fb, s in panels:
        total += refine(a, b, fa, fm, fb, s, eps / _QUAD_INITIAL_PANELS, 0)
    if unresolved > eps:
        raise ConvergenceError("adaptive quadrature did not converge", total, unresolved + residual)
    return total


# ---------------------------------------------------------------- ODEs


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    y: np.ndarray  # shape (len(t), dim)

    @property
    def final(self) -> np.ndarray:
        return self.y[-1]


Derivative = Callable[[float, Sequence[float]], Sequence[float]]


def rk4(state0: Sequence[float], derivative: Derivative, t0: float, t1: float, steps: int):
    """Classic fourth-order Runge-Kutta with ``steps`` equal steps.

    Returns (times, states) as Python lists; raises SingularityError on the
    first non-finite state.
    """
    h = (t1 - t0) / steps
    y = [float(v) for v in state0]
    n = len(y)
    ts = [t0]
    ys = [tuple(y)]
    t = t0
    for i in range(steps):
        k1 = derivative(t, y)
        y2 = [y[j] + 0.5 * h * k1[j] for j in range(n)]
        k2 = derivative(t + 0.5 * h, y2)
        y3 = [y[j] + 0.5 * h * k2[j] for j in range(n)]
        k3 = derivative(t + 0.5 * h, y3)
        y4 = [y[j] + h * k3[j] for j in range(n)]
        k4 = derivative(t + h, y4)
        y = [y[j] + h * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) / 6.0 for j in range(n)]
        t = t0 + (i + 1) * h
        if not all(math.isfinite(v) for v in y):
            raise SingularityError("non-finite state", ts[-1], np.array(ys[-1]))
        ts.append(t)
        ys.append(tuple(y))
    return ts, ys


def integrate_ode(
    state0: Sequence[float],
    derivative: Derivative,
    t_span,
    tol: Tolerance = Tolerance(1e-10, 1e-10),
    *,
    min_steps: int = 16,
    max_steps: int = 1 << 21,
) -> Trajectory:
    """Integrate ``y' = derivative(t, y)`` with fixed-step RK4.

    The step count is doubled until the runs with ``n`` and ``2n`` steps agree
    on every shared grid point to within ``15 * tol`` (the Richardson bound for
    a fourth-order method). The finer run is returned.
    """
    span = _as_interval(t_span)
    if span.width == 0.0:
        raise DomainError("t_span must be non-degenerate")
    n = max(1, int(min_steps))
    coarse = rk4(state0, derivative, span.lo, span.hi, n)
    while True:
        if 2 * n > max_steps:
            raise SingularityError(
                "step-doubling reached the step limit", coarse[0][-1], np.array(coarse[1][-1])
            )
        fine = rk4(state0, derivative, span.lo, span.hi, 2 * n)
        yc = np.asarray(coarse[1])
        yf = np.asarray(fine[1])[::2]
        err = float(np.max(np.abs(yf - yc))) / 15.0
        scale = float(np.max(np.abs(yf)))
        if err <= tol.bound(scale):
            return Trajectory(np.asarray(fine[0]), np.asarray(fine[1]))
        coarse = fine
        n *= 2


# ---------------------------------------------------------------- roots


def find_root(
    f: Callable[[float], float],
    bracket,
    tol: Tolerance = Tolerance(1e-12, 1e-12),
    *,
    max_iter: int = 400,
) -> float:
    """Bracketed root of ``f``.

    Regula falsi steps (with the Illinois down-weighting) are taken while they
    at least halve the bracket every second iteration; otherwise the method
    falls back to bisection, so the bracket always shrinks geometrically.
    Convergence is declared when the bracket is narrower than
    ``tol.bound(x)`` or an exact zero is hit. The result always lies inside
    the input bracket.
    """
    iv = _as_interval(bracket)
    a, b = iv.lo, iv.hi
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if not (math.isfinite(fa) and math.isfinite(fb)) or (fa > 0) == (fb > 0):
        raise BracketError(f"no sign change on [{a!r}, {b!r}]: f={fa!r}, {fb!r}")
    wa, wb = fa, fb  # Illinois-weighted copies
    last_side = 0
    width_two_ago = b - a
    width_one_ago = b - a
    for _ in range(max_iter):
        width = b - a
        if width <= tol.bound(0.5 * (a + b)):
            break
        bisect = width > 0.5 * width_two_ago
        x = 0.5 * (a + b)
        if not bisect and wb != wa:
            x_sec = (a * wb - b * wa) / (wb - wa)
            if a < x_sec < b:
                x = x_sec
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0) == (fa > 0):
            a, fa, wa = x, fx, fx
            if last_side == -1:
                wb *= 0.5
            last_side = -1
        else:
            b, fb, wb = x, fx, fx
            if last_side == 1:
                wa *= 0.5
            last_side = 1
        width_two_ago, width_one_ago = width_one_ago, width
    return a if abs(fa) <= abs(fb) else b


# ---------------------------------------------------------------- statistics

# Acklam's rational approximation to the inverse normal CDF (|rel err| < 1.2e-9)
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425


def normal_quantile(p: float) -> float:
    if not 0.0 < p < 1.0:
        raise DomainError(f"probability must lie in (0, 1), got {p!r}")
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return (((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) / (
            (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
        )
    if p > 1.0 - _P_LOW:
        return -normal_quantile(1.0 - p)
    q = p - 0.5
    r = q * q
    return (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q / (
        ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
    )


def mean_ci(sigma: float, n: int, confidence: float = 0.95) -> float:
    """Half-width of the two-sided normal confidence interval for a mean of
    ``n`` observations with standard deviation ``sigma``."""
    if not sigma > 0:
        raise DomainError("sigma must be positive")
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    if not 0.0 < confidence < 1.0:
        raise DomainError("confidence must lie in (0, 1)")
    z = normal_quantile(0.5 * (1.0 + confidence))
    return z * sigma / math.sqrt(n)
