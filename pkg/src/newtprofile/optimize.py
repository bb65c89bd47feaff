"""Resistance sweep over the apex parameter and minimum location.

A coarse equally-spaced pre-scan brackets the minimum, then golden-section
refinement shrinks the bracket to the requested width.  Everything is
deterministic: identical inputs give bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import flow
from .bezier import QuadraticBezier
from .quadrature import QuadratureError, QuadratureSpec

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

#: Pre-scan grid size used by minimize; dense enough that a broad interior
#: minimum of a smooth objective is always bracketed.
PRESCAN_POINTS = 101

_MAX_GOLDEN_ITERATIONS = 1000


@dataclass(frozen=True)
class SweepResult:
    """Sampled force curve: (apex, force) pairs on an increasing apex grid."""

    samples: tuple[tuple[float, float], ...]
    grid_size: int

    @property
    def apexes(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self.samples)

    @property
    def forces(self) -> tuple[float, ...]:
        return tuple(f for _, f in self.samples)

    def min_index(self) -> int:
        forces = self.forces
        return min(range(len(forces)), key=lambda i: (forces[i], i))


@dataclass(frozen=True)
class OptimizationResult:
    """Located minimizer with its final bracket and evaluation count.

    converged is False when the pre-scan minimum sat on the sweep boundary
    (no interior bracket to refine); apex_opt then equals a bracket edge
    and holds the best value seen.
    """

    apex_opt: float
    force_opt: float
    bracket: tuple[float, float]
    evaluations: int
    converged: bool


def _check_range(a_min: float, a_max: float) -> None:
    if not (0.0 <= a_min < a_max <= 1.0):
        raise ValueError(f"need 0 <= a_min < a_max <= 1, got [{a_min!r}, {a_max!r}]")


def sweep(
    cfg: flow.FlowConfig,
    spec: QuadratureSpec | None = None,
    a_min: float = 0.0,
    a_max: float = 1.0,
    n: int = 101,
) -> SweepResult:
    """Evaluate the parametric force on n equally spaced apex values."""
    _check_range(a_min, a_max)
    if n < 2:
        raise ValueError(f"grid size must be >= 2, got {n!r}")
    samples = []
    for a in np.linspace(a_min, a_max, n):
        apex = float(a)
        try:
            force = flow.total_force_parametric(cfg, QuadraticBezier(apex), spec)
        except QuadratureError as err:
            raise QuadratureError(f"sweep failed at apex {apex!r}: {err}") from err
        samples.append((apex, force))
    return SweepResult(tuple(samples), n)


def minimize(
    cfg: flow.FlowConfig,
    spec: QuadratureSpec | None = None,
    a_min: float = 0.0,
    a_max: float = 1.0,
    tol: float = 1e-8,
) -> OptimizationResult:
    """Locate the apex minimizing the resistance on [a_min, a_max].

    A 101-point pre-scan picks the lowest sample (leftmost on ties); if it
    is interior, golden-section refinement runs on the two surrounding grid
    points until the bracket is narrower than tol.  A boundary minimum is
    reported as-is with converged=False.
    """
    _check_range(a_min, a_max)
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    scan = sweep(cfg, spec, a_min, a_max, PRESCAN_POINTS)
    apexes = scan.apexes
    forces = scan.forces
    i = scan.min_index()
    evaluations = PRESCAN_POINTS

    if i == 0 or i == PRESCAN_POINTS - 1:
        lo = apexes[max(i - 1, 0)]
        hi = apexes[min(i + 1, PRESCAN_POINTS - 1)]
        return OptimizationResult(apexes[i], forces[i], (lo, hi), evaluations, False)

    def objective(a: float) -> float:
        return flow.total_force_parametric(cfg, QuadraticBezier(a), spec)

    lo, hi = apexes[i - 1], apexes[i + 1]
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1 = objective(x1)
    f2 = objective(x2)
    evaluations += 2
    for _ in range(_MAX_GOLDEN_ITERATIONS):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            if not lo < x1 < hi:  # bracket at floating-point resolution
                break
            f1 = objective(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            if not lo < x2 < hi:
                break
            f2 = objective(x2)
        evaluations += 1
    if f1 <= f2:
        apex_opt, force_opt = x1, f1
    else:
        apex_opt, force_opt = x2, f2
    return OptimizationResult(
        apex_opt, force_opt, (lo, hi), evaluations, (hi - lo) <= tol
    )
