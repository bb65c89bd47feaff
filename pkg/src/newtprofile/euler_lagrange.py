"""Pointwise analysis of the variational stationarity condition.

For the linear freestream v(x) = k*x the stationarity condition of the
resistance functional reduces to a first integral: x^2 f' / (1 + f'^2)^2
is constant along a stationary profile.  Writing c for (minus) that
constant gives a quartic in the slope p = f',

    x^2 p + c (1 + p^2)^2 = 0,

solved here pointwise by sign-scan bracketing and bisection.  No boundary
shooting on c is attempted; the module stops at root extraction and
residual verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .flow import FlowConfig

_SCAN_INTERVALS = 4096
_BISECT_WIDTH = 1e-13
_MERGE_DISTANCE = 1e-9


@dataclass(frozen=True)
class ELProblem:
    """Linear-freestream stationarity setup: v(x) = k*x, first-integral constant c."""

    k: float
    c: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k) and math.isfinite(self.c)):
            raise ValueError(f"k and c must be finite, got k={self.k!r}, c={self.c!r}")


def _quartic(p: float, c: float, xx: float) -> float:
    onepp = 1.0 + p * p
    return xx * p + c * onepp * onepp


def _quartic_derivative(p: float, c: float, xx: float) -> float:
    return xx + 4.0 * c * p * (1.0 + p * p)


def _refine_root(lo: float, hi: float, qlo: float, c: float, xx: float) -> float:
    """Bisection to _BISECT_WIDTH, then a short Newton polish.

    Bisection alone leaves a residual of roughly |q'| * width, which can
    exceed the advertised residual bound when the root sits far out on the
    p-axis; two or three Newton steps land at machine precision.
    """
    for _ in range(200):
        if hi - lo <= _BISECT_WIDTH:
            break
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        qmid = _quartic(mid, c, xx)
        if qmid == 0.0:
            return mid
        if (qlo < 0.0) == (qmid < 0.0):
            lo, qlo = mid, qmid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    for _ in range(4):
        dq = _quartic_derivative(root, c, xx)
        if dq == 0.0:
            break
        step = _quartic(root, c, xx) / dq
        root -= step
        if abs(step) <= 1e-16 * max(1.0, abs(root)):
            break
    return root


def quartic_real_roots(prob: ELProblem, x: float) -> list[float]:
    """All real slope values p solving x^2 p + c (1 + p^2)^2 = 0, ascending.

    Roots are located by sign changes on a uniform scan of [-R, R], where R
    is a conservative Cauchy-style bound, then refined.  Roots closer than
    1e-9 are merged.  Degenerate cases: c = 0 reduces to x^2 p = 0 with the
    single root 0; x = 0 with c != 0 has no real roots.
    """
    c = prob.c
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    if c == 0.0:
        return [0.0]
    if x == 0.0:
        return []
    xx = x * x
    bound = 1.0 + (xx + 16.0 * abs(c)) / abs(c)
    grid = np.linspace(-bound, bound, _SCAN_INTERVALS + 1)
    values = xx * grid + c * (1.0 + grid * grid) ** 2

    roots: list[float] = []
    for i in range(_SCAN_INTERVALS):
        qlo = float(values[i])
        qhi = float(values[i + 1])
        if qlo == 0.0:
            roots.append(float(grid[i]))
        elif (qlo < 0.0) != (qhi < 0.0) and qhi != 0.0:
            roots.append(_refine_root(float(grid[i]), float(grid[i + 1]), qlo, c, xx))
    if float(values[-1]) == 0.0:
        roots.append(float(grid[-1]))

    roots.sort()
    merged: list[float] = []
    for r in roots:
        if merged and r - merged[-1] < _MERGE_DISTANCE:
            continue
        merged.append(r)
    return merged


def stationarity_residual(
    cfg: FlowConfig, slope_fn: Callable[[float], float], x: float, h: float
) -> float:
    """Central-difference derivative of the first integral x^2 f'/(1 + f'^2)^2.

    Zero (up to O(h^2) and rounding) exactly when the slope field is
    stationary at x.  The constant prefactor -2 rho k^2 of the full
    stationarity condition is omitted; it does not affect where the
    residual vanishes.  cfg must carry a linear-through-origin freestream.
    """
    if not h > 0.0:
        raise ValueError(f"step h must be positive, got {h!r}")
    if x - h < 0.0:
        raise ValueError(f"need x - h >= 0, got x={x!r}, h={h!r}")
    coeffs = cfg.velocity.coefficients
    if len(coeffs) > 2 or (len(coeffs) >= 1 and coeffs[0] != 0.0):
        raise ValueError(
            f"stationarity analysis assumes v(x) = k*x, got coefficients {coeffs!r}"
        )

    def first_integral(u: float) -> float:
        p = slope_fn(u)
        onepp = 1.0 + p * p
        return u * u * p / (onepp * onepp)

    return (first_integral(x + h) - first_integral(x - h)) / (2.0 * h)
