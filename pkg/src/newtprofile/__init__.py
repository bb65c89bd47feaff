"""Minimum-resistance convex profile design in variable-speed flows.

A one-parameter family of quadratic Bezier arches is scored by the total
impact pressure (the sin-squared law) of a freestream whose speed varies
across the chord; a deterministic sweep-and-refine optimizer locates the
apex with the least resistance.

The quadrature hot path runs on a compiled extension when available and
falls back to pure-Python twins otherwise; backend_name() reports which
one is active.
"""

from ._backend import BACKEND as _BACKEND
from .bezier import QuadraticBezier
from .euler_lagrange import ELProblem, quartic_real_roots, stationarity_residual
from .flow import (
    FlowConfig,
    VelocityPolynomial,
    cubic_freestream_integrand,
    pressure,
    resistance_integrand,
    total_force_cartesian,
    total_force_parametric,
)
from .optimize import OptimizationResult, SweepResult, minimize, sweep
from .quadrature import (
    ADAPTIVE_SIMPSON,
    GAUSS_LEGENDRE,
    RIEMANN_ORACLE,
    QuadratureError,
    QuadratureSpec,
    gauss_legendre_nodes,
    integrate,
)

__version__ = "0.1.0"

__all__ = [
    "ADAPTIVE_SIMPSON",
    "ELProblem",
    "FlowConfig",
    "GAUSS_LEGENDRE",
    "OptimizationResult",
    "QuadraticBezier",
    "QuadratureError",
    "QuadratureSpec",
    "RIEMANN_ORACLE",
    "SweepResult",
    "VelocityPolynomial",
    "backend_name",
    "cubic_freestream_integrand",
    "gauss_legendre_nodes",
    "integrate",
    "minimize",
    "pressure",
    "resistance_integrand",
    "stationarity_residual",
    "sweep",
    "quartic_real_roots",
    "total_force_cartesian",
    "total_force_parametric",
]


def backend_name() -> str:
    """Active kernel backend: 'compiled' or 'python'."""
    return _BACKEND
