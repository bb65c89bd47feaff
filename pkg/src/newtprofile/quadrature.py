"""One-dimensional quadrature on [0, 1].

Two production rules (adaptive Simpson with Richardson correction, and
Gauss-Legendre with nodes computed at startup) plus a deliberately plain
midpoint rule kept around as an independent ground-truth generator for
tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

ADAPTIVE_SIMPSON = "adaptive_simpson"
GAUSS_LEGENDRE = "gauss_legendre"
RIEMANN_ORACLE = "riemann_oracle"

_METHODS = (ADAPTIVE_SIMPSON, GAUSS_LEGENDRE, RIEMANN_ORACLE)


class QuadratureError(RuntimeError):
    """The adaptive rule hit its depth limit before reaching the tolerance."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration method and its knobs.

    abs_tol and max_depth drive the adaptive rule; node_count is the
    Gauss-Legendre node count or the midpoint panel count.  Unused fields
    are simply ignored by the selected method.
    """

    method: str = ADAPTIVE_SIMPSON
    abs_tol: float = 1e-10
    max_depth: int = 40
    node_count: int = 64

    def __post_init__(self) -> None:
        if self.method not in _METHODS:
            raise ValueError(f"unknown quadrature method {self.method!r}")
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if not 1 <= int(self.max_depth) <= 60:
            raise ValueError(f"max_depth must be in [1, 60], got {self.max_depth!r}")
        if int(self.node_count) < 2:
            raise ValueError(f"node_count must be >= 2, got {self.node_count!r}")


def integrate(fn: Callable[[float], float], spec: QuadratureSpec) -> float:
    """Estimate the integral of fn over [0, 1] per the given spec.

    Raises QuadratureError if the adaptive rule exhausts max_depth with an
    interval still above tolerance.
    """
    if spec.method == ADAPTIVE_SIMPSON:
        value, converged = _adaptive_simpson(fn, spec.abs_tol, spec.max_depth)
        if not converged:
            raise QuadratureError(
                f"adaptive Simpson did not reach abs_tol={spec.abs_tol:g} "
                f"within max_depth={spec.max_depth}"
            )
        return value
    if spec.method == GAUSS_LEGENDRE:
        nodes, weights = gauss_legendre_nodes(spec.node_count)
        total = 0.0
        for i in range(len(nodes)):
            total += weights[i] * fn(nodes[i])
        return total
    return _midpoint(fn, spec.node_count)


def _adaptive_simpson(
    fn: Callable[[float], float], abs_tol: float, max_depth: int
) -> tuple[float, bool]:
    converged = [True]

    def recurse(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        flm = fn(0.5 * (lo + mid))
        frm = fn(0.5 * (mid + hi))
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth <= 0:
            converged[0] = False
            return left + right + delta / 15.0
        return recurse(lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) + recurse(
            mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1
        )

    flo = fn(0.0)
    fmid = fn(0.5)
    fhi = fn(1.0)
    whole = (flo + 4.0 * fmid + fhi) / 6.0
    value = recurse(0.0, 1.0, flo, fmid, fhi, whole, abs_tol, max_depth)
    return value, converged[0]


def _midpoint(fn: Callable[[float], float], panels: int) -> float:
    mids = (np.arange(panels, dtype=np.float64) + 0.5) / panels
    try:
        values = np.asarray(fn(mids), dtype=np.float64)
        if values.shape != mids.shape:
            raise TypeError
    except (TypeError, ValueError):
        values = np.fromiter((fn(float(t)) for t in mids), dtype=np.float64, count=panels)
    return float(np.sum(values) / panels)


@lru_cache(maxsize=None)
def gauss_legendre_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [0, 1].

    Roots of the degree-n Legendre polynomial found by Newton iteration on
    the three-term recurrence, starting from the Chebyshev-like guess
    cos(pi*(k + 3/4)/(n + 1/2)).  No tabulated constants.  The returned
    arrays are read-only (they are cached and shared).
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n!r}")
    k = np.arange(n, dtype=np.float64)
    x = np.cos(math.pi * (k + 0.75) / (n + 0.5))
    for _ in range(100):
        p_prev = np.ones_like(x)
        p = x.copy()
        for j in range(2, n + 1):
            p_prev, p = p, ((2.0 * j - 1.0) * x * p - (j - 1.0) * p_prev) / j
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) < 1e-15:
            break
    weights = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    nodes01 = (x[order] + 1.0) / 2.0
    weights01 = weights[order] / 2.0
    nodes01.setflags(write=False)
    weights01.setflags(write=False)
    return nodes01, weights01
