"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Tolerances are pinned here and nowhere else.
"""

import math
import time

import numpy as np
import pytest

from newtprofile import cli
from newtprofile.bezier import QuadraticBezier
from newtprofile.euler_lagrange import ELProblem, quartic_real_roots
from newtprofile.flow import (
    FlowConfig,
    VelocityPolynomial,
    cubic_freestream_integrand,
    _integrand_values,
    total_force_cartesian,
    total_force_parametric,
)
from newtprofile.optimize import minimize, sweep
from newtprofile.quadrature import (
    GAUSS_LEGENDRE,
    RIEMANN_ORACLE,
    QuadratureSpec,
    integrate,
)

CUBIC = (0.0, 0.0, 0.0, -5.0)
CUBIC_CFG = FlowConfig(1.0, VelocityPolynomial(CUBIC))
UNIT_CFG = FlowConfig(1.0, VelocityPolynomial((1.0,)))
REPORTED_OPTIMUM = 0.682564
ARCTAN_HALF = math.atan(2.0) / 2.0


def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{criterion} failed: {detail}"


def test_c1_benchmark_optimum_via_cli(capsys):
    start = time.perf_counter()
    code = cli.main(
        [
            "optimize",
            "--velocity",
            "0,0,0,-5",
            "--rho",
            "1",
            "--a-min",
            "0",
            "--a-max",
            "1",
            "--tol",
            "1e-8",
            "--quad-tol",
            "1e-10",
        ]
    )
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    apex = next(
        float(line.split(" = ")[1])
        for line in out.splitlines()
        if line.startswith("# apex_opt")
    )
    deviation = abs(apex - REPORTED_OPTIMUM)
    with capsys.disabled():
        report(
            "C1 benchmark-optimum",
            code == 0 and deviation <= 5e-5 and elapsed < 1.0,
            f"apex_opt={apex:.9f}, |diff|={deviation:.3g} (<=5e-5), "
            f"elapsed={elapsed * 1e3:.0f}ms (<1s), exit={code}",
        )


def test_c2_sweep_shape(capsys):
    result = sweep(CUBIC_CFG, QuadratureSpec(), 0.0, 1.0, 101)
    forces = result.forces
    i = result.min_index()
    apex_min = result.apexes[i]
    interior = 0.6 < apex_min < 0.8
    decreasing = all(forces[j + 1] - forces[j] < 1e-9 for j in range(i))
    increasing = all(forces[j + 1] - forces[j] > -1e-9 for j in range(i, 100))
    with capsys.disabled():
        report(
            "C2 sweep-shape",
            interior and decreasing and increasing,
            f"min sample at a={apex_min}, decreasing-before={decreasing}, "
            f"increasing-after={increasing}",
        )


def test_c3_form_equivalence(capsys):
    rng = np.random.default_rng(42)
    spec = QuadratureSpec()
    start = time.perf_counter()
    worst = 0.0
    for _ in range(20):
        degree = int(rng.integers(0, 6))
        coeffs = tuple(float(c) for c in rng.uniform(-2.0, 2.0, degree + 1))
        cfg = FlowConfig(1.0, VelocityPolynomial(coeffs))
        for tenth in range(1, 10):
            curve = QuadraticBezier(tenth / 10.0)
            fp = total_force_parametric(cfg, curve, spec)
            fc = total_force_cartesian(cfg, curve, spec)
            worst = max(worst, abs(fc - fp) / max(fp, 1e-30))
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        report(
            "C3 form-equivalence",
            worst <= 1e-8 and elapsed < 5.0,
            f"worst rel diff={worst:.3g} (<=1e-8), elapsed={elapsed:.2f}s (<5s)",
        )


def test_c4_expanded_integrand_transcription(capsys):
    apexes = np.linspace(0.0, 1.0, 100)[:, None]
    ts = np.linspace(0.0, 1.0, 100)[None, :]
    expanded = cubic_freestream_integrand(apexes, ts)
    generic = _integrand_values(apexes, ts, CUBIC)
    denom = np.maximum(np.maximum(np.abs(expanded), np.abs(generic)), 1e-300)
    worst = float(np.max(np.abs(expanded - generic) / denom))
    with capsys.disabled():
        report(
            "C4 expanded-integrand",
            worst <= 1e-12,
            f"worst rel diff={worst:.3g} (<=1e-12) on 100x100 grid",
        )


def test_c5_closed_form_quadrature(capsys):
    def kernel(t):
        return 1.0 / (1.0 + (2.0 - 4.0 * t) ** 2)

    err_simpson = abs(integrate(kernel, QuadratureSpec(abs_tol=1e-10)) - ARCTAN_HALF)
    err_gauss = abs(
        integrate(kernel, QuadratureSpec(method=GAUSS_LEGENDRE, node_count=64))
        - ARCTAN_HALF
    )
    force = total_force_parametric(UNIT_CFG, QuadraticBezier(0.5), QuadratureSpec())
    err_force = abs(force - ARCTAN_HALF)
    with capsys.disabled():
        report(
            "C5 closed-form-quadrature",
            err_simpson <= 1e-10 and err_gauss <= 1e-10 and err_force <= 1e-9,
            f"simpson err={err_simpson:.3g}, gauss err={err_gauss:.3g} (<=1e-10), "
            f"force err={err_force:.3g} (<=1e-9)",
        )


def test_c6_constant_flow_symmetry(capsys):
    forces = sweep(UNIT_CFG, QuadratureSpec(), 0.0, 1.0, 101).forces
    worst = max(abs(forces[i] - forces[100 - i]) for i in range(101))
    result = minimize(UNIT_CFG, QuadratureSpec(), 0.05, 0.95, 1e-8)
    deviation = abs(result.apex_opt - 0.5)
    with capsys.disabled():
        report(
            "C6 symmetry",
            worst <= 1e-10 and result.converged and deviation <= 1e-6,
            f"max |F(a)-F(1-a)|={worst:.3g} (<=1e-10), "
            f"apex_opt offset={deviation:.3g} (<=1e-6)",
        )


def test_c7_argmin_scale_invariance(capsys):
    tol = 1e-8
    base = minimize(CUBIC_CFG, QuadratureSpec(), 0.0, 1.0, tol)
    rho_scaled = minimize(
        FlowConfig(7.3, VelocityPolynomial(CUBIC)), QuadratureSpec(), 0.0, 1.0, tol
    )
    v_scaled = minimize(
        FlowConfig(1.0, VelocityPolynomial(tuple(3.0 * c for c in CUBIC))),
        QuadratureSpec(),
        0.0,
        1.0,
        tol,
    )
    d_rho = abs(rho_scaled.apex_opt - base.apex_opt)
    d_vel = abs(v_scaled.apex_opt - base.apex_opt)
    with capsys.disabled():
        report(
            "C7 scale-invariance",
            d_rho < 10 * tol and d_vel < 10 * tol,
            f"|d apex| rho*7.3: {d_rho:.3g}, coeffs*3: {d_vel:.3g} (<1e-7)",
        )


def test_c8_stationarity_quartic(capsys):
    rng = np.random.default_rng(88)
    checked = 0
    worst_residual_ratio = 0.0
    counts_match = True
    while checked < 200:
        c = float(rng.uniform(-1.5, 1.5))
        x = float(rng.uniform(-1.5, 1.5))
        if abs(c) < 1e-9 or x == 0.0:
            continue
        checked += 1
        roots = quartic_real_roots(ELProblem(1.0, c), x)
        scale = max(1.0, abs(c), x * x)
        for p in roots:
            residual = abs(x * x * p + c * (1.0 + p * p) ** 2)
            worst_residual_ratio = max(worst_residual_ratio, residual / (1e-10 * scale))
        bound = 1.0 + (x * x + 16.0 * abs(c)) / abs(c)
        grid = np.linspace(-bound, bound, 100_000)
        values = x * x * grid + c * (1.0 + grid * grid) ** 2
        oracle = int(np.sum(np.sign(values[:-1]) * np.sign(values[1:]) < 0))
        oracle += int(np.sum(values == 0.0))
        if len(roots) != oracle:
            counts_match = False
    degenerate_ok = (
        quartic_real_roots(ELProblem(1.0, 0.0), 0.7) == [0.0]
        and quartic_real_roots(ELProblem(1.0, -0.4), 0.0) == []
    )
    with capsys.disabled():
        report(
            "C8 quartic-roots",
            worst_residual_ratio <= 1.0 and counts_match and degenerate_ok,
            f"200 samples: worst residual at {worst_residual_ratio:.3g} of bound, "
            f"counts match oracle={counts_match}, degenerate cases={degenerate_ok}",
        )


def _sweep_argmin_oracle(grid_points: int = 100_001) -> float:
    """Brute-force argmin by composite Simpson, independent of production code."""
    panels = 256
    ts = np.linspace(0.0, 1.0, 2 * panels + 1)
    weights = np.ones_like(ts)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    weights /= 6.0 * panels
    apexes = np.linspace(0.0, 1.0, grid_points)
    best_value = np.inf
    best_apex = 0.0
    for start in range(0, grid_points, 4000):
        chunk = apexes[start : start + 4000, None]
        xt = 2.0 * chunk * ts + (1.0 - 2.0 * chunk) * ts * ts
        dx = 2.0 * chunk + 2.0 * (1.0 - 2.0 * chunk) * ts
        dy = 2.0 - 4.0 * ts
        v = -5.0 * xt**3
        forces = (v * v * dx**3 / (dx * dx + dy * dy)) @ weights
        i = int(np.argmin(forces))
        if forces[i] < best_value:
            best_value = float(forces[i])
            best_apex = float(chunk[i, 0])
    return best_apex


def test_c9_brute_force_oracles(capsys):
    rng = np.random.default_rng(99)
    adaptive = QuadratureSpec()
    oracle_spec = QuadratureSpec(method=RIEMANN_ORACLE, node_count=1_000_000)
    worst = 0.0
    for _ in range(20):
        curve = QuadraticBezier(float(rng.uniform(0.0, 1.0)))
        fa = total_force_parametric(CUBIC_CFG, curve, adaptive)
        fo = total_force_parametric(CUBIC_CFG, curve, oracle_spec)
        worst = max(worst, abs(fa - fo))
    apex_opt = minimize(CUBIC_CFG, adaptive, 0.0, 1.0, 1e-8).apex_opt
    oracle_apex = _sweep_argmin_oracle()
    apex_diff = abs(apex_opt - oracle_apex)
    with capsys.disabled():
        report(
            "C9 oracle-agreement",
            worst <= 1e-5 and apex_diff <= 2e-5,
            f"max |adaptive - midpoint(1e6)|={worst:.3g} (<=1e-5), "
            f"|apex_opt - sweep argmin|={apex_diff:.3g} (<=2e-5)",
        )
