"""Freestream model, impact-pressure law, and the resistance functional.

The flow is parallel to the y-axis with an x-dependent speed given by a
polynomial.  The pressure on a profile y = f(x) follows the sin-squared
impact law p = rho * v(x)^2 / (1 + f'(x)^2), and the total resistance is
its integral across the unit chord.  For the quadratic Bezier family the
functional has an equivalent parametric form, which is what the optimizer
evaluates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature
from ._backend import kernels
from .bezier import QuadraticBezier
from .quadrature import (
    ADAPTIVE_SIMPSON,
    GAUSS_LEGENDRE,
    QuadratureError,
    QuadratureSpec,
)


@dataclass(frozen=True)
class VelocityPolynomial:
    """Freestream speed v(x) as ascending polynomial coefficients.

    An empty coefficient list is the zero polynomial.  Speeds may be
    negative; only v^2 enters the pressure law.
    """

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coefficients)
        if any(not math.isfinite(c) for c in coeffs):
            raise ValueError(f"non-finite velocity coefficients: {coeffs!r}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def at(self, x):
        """Horner evaluation of v(x); accepts scalars or numpy arrays."""
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class FlowConfig:
    """Fluid density plus the freestream speed distribution."""

    rho: float
    velocity: VelocityPolynomial

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            raise ValueError(f"rho must be finite and >= 0, got {self.rho!r}")


def pressure(cfg: FlowConfig, x, slope):
    """Impact pressure rho * v(x)^2 / (1 + slope^2); never negative."""
    v = cfg.velocity.at(x)
    return cfg.rho * v * v / (1.0 + slope * slope)


def resistance_integrand(cfg: FlowConfig, curve: QuadraticBezier, t):
    """Pointwise integrand of the parametric resistance functional.

    rho * v(x(t))^2 * x'(t)^3 / (x'(t)^2 + y'(t)^2), finite for every apex
    in [0, 1] (the denominator never vanishes on the family: y' = 0 only at
    t = 1/2 where x' > 0).  Vectorized over t.
    """
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise ValueError(f"t={t!r} outside [0, 1]")
    return cfg.rho * _integrand_values(curve.apex, t, cfg.velocity.coefficients)


def _integrand_values(apex, t, coeffs):
    xt = 2.0 * apex * t + (1.0 - 2.0 * apex) * t * t
    dx = 2.0 * apex + 2.0 * (1.0 - 2.0 * apex) * t
    dy = 2.0 - 4.0 * t
    v = 0.0
    for c in reversed(coeffs):
        v = v * xt + c
    return v * v * dx * dx * dx / (dx * dx + dy * dy)


def cubic_freestream_integrand(apex, t):
    """Expanded integrand for the benchmark freestream v(x) = -5 x^3, rho = 1.

    Closed form in apex and t alone:

        50 t^6 (a + t - 2at)^3 (2a + t - 2at)^6
        ---------------------------------------
           (a + t - 2at)^2  +  (1 - 2t)^2

    The leading 50 collects 25 from v^2, 8 from x'^3 and 1/4 from the
    denominator after pulling out the common factor 2.  Kept as a separate
    literal transcription so it can be tested against the generic
    resistance_integrand.  Vectorized over apex and t.
    """
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise ValueError(f"t={t!r} outside [0, 1]")
    p = apex + t - 2.0 * apex * t  # x'(t) / 2
    q = 2.0 * apex + t - 2.0 * apex * t  # x(t) / t
    return 50.0 * t**6 * p**3 * q**6 / (p * p + (1.0 - 2.0 * t) ** 2)


def _normalized_coefficients(cfg: FlowConfig):
    """Split the velocity into a scale and unit-size coefficients.

    Factoring rho and the coefficient magnitude out of the quadrature keeps
    the integrand near unit scale and makes the location of the force
    minimum exactly invariant under rescaling either one.
    """
    coeffs = cfg.velocity.coefficients
    scale = max((abs(c) for c in coeffs), default=0.0)
    if scale == 0.0 or cfg.rho == 0.0:
        return 0.0, None
    normalized = np.ascontiguousarray([c / scale for c in coeffs], dtype=np.float64)
    return cfg.rho * scale * scale, normalized


def total_force_parametric(
    cfg: FlowConfig, curve: QuadraticBezier, spec: QuadratureSpec | None = None
) -> float:
    """Total resistance on the profile, integrated in the curve parameter.

    Defined for every apex in [0, 1].  The integration tolerance applies to
    the normalized integrand (unit-scale velocity, rho = 1); the result is
    scaled back afterwards.
    """
    if spec is None:
        spec = QuadratureSpec()
    prefactor, normalized = _normalized_coefficients(cfg)
    if normalized is None:
        return 0.0
    apex = curve.apex
    if spec.method == ADAPTIVE_SIMPSON:
        value, converged = kernels.force_adaptive(
            apex, normalized, spec.abs_tol, spec.max_depth
        )
        if not converged:
            raise QuadratureError(
                f"adaptive Simpson did not reach abs_tol={spec.abs_tol:g} within "
                f"max_depth={spec.max_depth} at apex {apex!r}"
            )
    elif spec.method == GAUSS_LEGENDRE:
        nodes, weights = quadrature.gauss_legendre_nodes(spec.node_count)
        value = kernels.force_gauss(apex, normalized, nodes, weights)
    else:
        coeffs = tuple(normalized)
        value = quadrature.integrate(
            lambda t: _integrand_values(apex, t, coeffs), spec
        )
    return prefactor * value


def total_force_cartesian(
    cfg: FlowConfig, curve: QuadraticBezier, spec: QuadratureSpec | None = None
) -> float:
    """Total resistance integrated in x, composing the slope with x-inversion.

    Needs the apex strictly inside (0, 1) so the profile is a function
    graph.  Agrees with total_force_parametric by change of variables;
    kept as an independent route for cross-checking.
    """
    if spec is None:
        spec = QuadratureSpec()
    if not 0.0 < curve.apex < 1.0:
        raise ValueError(
            f"cartesian force needs apex strictly inside (0, 1), got {curve.apex!r}"
        )
    prefactor, normalized = _normalized_coefficients(cfg)
    if normalized is None:
        return 0.0
    coeffs = tuple(normalized)

    def fn(x: float) -> float:
        fp = curve.slope(curve.t_from_x(x))
        v = 0.0
        for c in reversed(coeffs):
            v = v * x + c
        return v * v / (1.0 + fp * fp)

    try:
        value = quadrature.integrate(fn, spec)
    except QuadratureError as err:
        raise QuadratureError(f"{err} at apex {curve.apex!r}") from err
    return prefactor * value
