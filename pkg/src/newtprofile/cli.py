"""Command-line front end.

Subcommands: sweep (force curve as CSV), optimize (locate the minimum),
profile (sample a curve as CSV), check (run the built-in consistency
suites).  Output rows use shortest round-trip float formatting so repeated
runs produce byte-identical files; human-readable summary lines go to
stdout prefixed with "# " so mixed streams stay machine-parsable.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from . import flow, optimize, quadrature
from ._backend import BACKEND
from .bezier import QuadraticBezier
from .flow import FlowConfig, VelocityPolynomial
from .quadrature import (
    ADAPTIVE_SIMPSON,
    GAUSS_LEGENDRE,
    QuadratureError,
    QuadratureSpec,
)


def _fmt(x: float) -> str:
    # repr of a Python float is the shortest string that round-trips,
    # never more than 17 significant digits
    return repr(float(x))


def _parse_coeffs(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"velocity must be comma-separated numbers (ascending powers), got {text!r}"
        ) from None


@dataclass(frozen=True)
class RunConfig:
    """Validated bundle of everything a sweep or optimize run needs."""

    velocity_coeffs: tuple[float, ...]
    rho: float
    apex_range: tuple[float, float]
    grid_size: int
    opt_tol: float
    quad: QuadratureSpec
    output_path: str | None

    def flow_config(self) -> FlowConfig:
        return FlowConfig(self.rho, VelocityPolynomial(self.velocity_coeffs))


def _run_config(args: argparse.Namespace) -> RunConfig:
    method = ADAPTIVE_SIMPSON if args.quad == "simpson" else GAUSS_LEGENDRE
    quad = QuadratureSpec(
        method=method, abs_tol=args.quad_tol, node_count=args.nodes
    )
    lo, hi = args.a_min, args.a_max
    if not (0.0 <= lo < hi <= 1.0):
        raise ValueError(f"need 0 <= a-min < a-max <= 1, got [{lo!r}, {hi!r}]")
    grid = getattr(args, "grid", 101)
    if grid < 2:
        raise ValueError(f"grid must be >= 2, got {grid!r}")
    tol = getattr(args, "tol", 1e-8)
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    cfg = RunConfig(
        velocity_coeffs=args.velocity,
        rho=args.rho,
        apex_range=(lo, hi),
        grid_size=grid,
        opt_tol=tol,
        quad=quad,
        output_path=args.out,
    )
    cfg.flow_config()  # validate rho and coefficients before any computation
    return cfg


def _write_rows(path: str | None, header: str, rows: list[str]) -> None:
    """Write a CSV artifact atomically (temp file + rename), or to stdout."""
    text = header + "\n" + "".join(row + "\n" for row in rows)
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        os.unlink(tmp_path)
        raise


def _note_low_apex(apex: float) -> None:
    if apex <= 0.5:
        print(
            "# note: minimum at apex <= 0.5; the profile peak sits in the left "
            "half of the chord (valid, but outside the usually quoted (1/2, 1) range)"
        )


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    lo, hi = cfg.apex_range
    result = optimize.sweep(cfg.flow_config(), cfg.quad, lo, hi, cfg.grid_size)
    rows = [f"{_fmt(a)},{_fmt(f)}" for a, f in result.samples]
    _write_rows(cfg.output_path, "a,F", rows)
    i = result.min_index()
    apex, force = result.samples[i]
    print(f"# grid minimum: F = {_fmt(force)} at a = {_fmt(apex)} (sample {i})")
    _note_low_apex(apex)
    return 0


def cmd_optimize(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    lo, hi = cfg.apex_range
    flowcfg = cfg.flow_config()
    result = optimize.minimize(flowcfg, cfg.quad, lo, hi, cfg.opt_tol)
    print(f"# apex_opt = {_fmt(result.apex_opt)}")
    print(f"# force_opt = {_fmt(result.force_opt)}")
    print(f"# bracket = {_fmt(result.bracket[0])},{_fmt(result.bracket[1])}")
    print(f"# evaluations = {result.evaluations}")
    print(f"# converged = {'true' if result.converged else 'false'}")
    if not result.converged:
        probes = [
            flow.total_force_parametric(flowcfg, QuadraticBezier(a), cfg.quad)
            for a in (lo, 0.5 * (lo + hi), hi)
        ]
        spread = max(probes) - min(probes)
        if spread <= 1e-15 * max(1.0, abs(result.force_opt)):
            print("# note: objective is flat over the apex range")
        else:
            print("# note: minimum sits on the sweep boundary")
    _note_low_apex(result.apex_opt)
    if cfg.output_path is not None:
        header = "apex_opt,force_opt,bracket_lo,bracket_hi,evaluations,converged"
        row = ",".join(
            [
                _fmt(result.apex_opt),
                _fmt(result.force_opt),
                _fmt(result.bracket[0]),
                _fmt(result.bracket[1]),
                str(result.evaluations),
                "true" if result.converged else "false",
            ]
        )
        _write_rows(cfg.output_path, header, [row])
    return 0 if result.converged else 2


def cmd_profile(args: argparse.Namespace) -> int:
    if args.samples < 2:
        raise ValueError(f"samples must be >= 2, got {args.samples!r}")
    curve = QuadraticBezier(args.apex)
    rows = []
    for t in np.linspace(0.0, 1.0, args.samples):
        x, y = curve.point(float(t))
        rows.append(f"{_fmt(float(t))},{_fmt(x)},{_fmt(y)}")
    _write_rows(args.out, "t,x,y", rows)
    print(f"# profile: apex = {_fmt(args.apex)}, samples = {args.samples}")
    return 0


# ---------------------------------------------------------------------------
# check suites


def _check_slope_consistency() -> tuple[bool, str]:
    worst = 0.0
    for apex in np.linspace(0.05, 0.95, 19):
        curve = QuadraticBezier(float(apex))
        for t in np.linspace(0.0, 1.0, 101):
            dx, dy = curve.derivative(float(t))
            expected = dy / dx
            rel = abs(curve.slope(float(t)) - expected) / max(abs(expected), 1e-30)
            worst = max(worst, rel)
    return worst <= 1e-14, f"max slope/derivative rel diff = {worst:.3g}"


def _check_form_equivalence() -> tuple[bool, str]:
    probes = [
        (1.0,),
        (0.0, 1.0),
        (0.0, 0.0, 0.0, -5.0),
        (0.5, -1.0, 0.25, 2.0, -0.75, 0.3),
    ]
    spec = QuadratureSpec()
    worst = 0.0
    for coeffs in probes:
        cfg = FlowConfig(1.0, VelocityPolynomial(coeffs))
        for apex in np.arange(0.1, 0.95, 0.1):
            curve = QuadraticBezier(float(apex))
            fp = flow.total_force_parametric(cfg, curve, spec)
            fc = flow.total_force_cartesian(cfg, curve, spec)
            worst = max(worst, abs(fc - fp) / max(abs(fp), 1e-30))
    return worst <= 1e-8, f"max cartesian/parametric rel diff = {worst:.3g}"


def _check_constant_flow_symmetry() -> tuple[bool, str]:
    cfg = FlowConfig(1.0, VelocityPolynomial((1.0,)))
    result = optimize.sweep(cfg, QuadratureSpec(), 0.0, 1.0, 101)
    forces = result.forces
    worst = max(
        abs(forces[i] - forces[100 - i]) for i in range(101)
    )
    return worst <= 1e-10, f"max |F(a) - F(1-a)| = {worst:.3g}"


def _check_expanded_integrand() -> tuple[bool, str]:
    apexes = np.linspace(0.0, 1.0, 100)[:, None]
    ts = np.linspace(0.0, 1.0, 100)[None, :]
    expanded = flow.cubic_freestream_integrand(apexes, ts)
    cfg = FlowConfig(1.0, VelocityPolynomial((0.0, 0.0, 0.0, -5.0)))
    generic = flow._integrand_values(apexes, ts, cfg.velocity.coefficients)
    denom = np.maximum(np.maximum(np.abs(expanded), np.abs(generic)), 1e-300)
    worst = float(np.max(np.abs(expanded - generic) / denom))
    return worst <= 1e-12, f"max expanded/generic rel diff = {worst:.3g}"


def _check_quadrature_oracle() -> tuple[bool, str]:
    cfg = FlowConfig(1.0, VelocityPolynomial((0.0, 0.0, 0.0, -5.0)))
    adaptive = QuadratureSpec()
    gauss = QuadratureSpec(method=GAUSS_LEGENDRE, node_count=64)
    oracle = QuadratureSpec(method=quadrature.RIEMANN_ORACLE, node_count=1_000_000)
    worst_oracle = 0.0
    worst_methods = 0.0
    for apex in np.linspace(0.05, 0.95, 10):
        curve = QuadraticBezier(float(apex))
        fa = flow.total_force_parametric(cfg, curve, adaptive)
        fg = flow.total_force_parametric(cfg, curve, gauss)
        fo = flow.total_force_parametric(cfg, curve, oracle)
        worst_oracle = max(worst_oracle, abs(fa - fo))
        worst_methods = max(worst_methods, abs(fa - fg))
    ok = worst_oracle <= 1e-5 and worst_methods <= 1e-9
    return ok, (
        f"max |adaptive - midpoint(1e6)| = {worst_oracle:.3g}, "
        f"max |adaptive - gauss64| = {worst_methods:.3g}"
    )


def _check_gauss_exactness() -> tuple[bool, str]:
    nodes, weights = quadrature.gauss_legendre_nodes(64)
    worst = 0.0
    for k in (0, 1, 31, 63, 127):
        estimate = float(np.sum(weights * nodes**k))
        worst = max(worst, abs(estimate - 1.0 / (k + 1)) * (k + 1))
    return worst <= 1e-12, f"max monomial rel err = {worst:.3g}"


_CHECKS = [
    ("slope-consistency", _check_slope_consistency),
    ("form-equivalence", _check_form_equivalence),
    ("constant-flow-symmetry", _check_constant_flow_symmetry),
    ("expanded-integrand", _check_expanded_integrand),
    ("quadrature-oracle", _check_quadrature_oracle),
    ("gauss-exactness", _check_gauss_exactness),
]


def cmd_check(args: argparse.Namespace) -> int:
    failures = 0
    for name, check in _CHECKS:
        ok, metric = check()
        status = "PASS" if ok else "FAIL"
        print(f"# check {name}: {status} ({metric})")
        if not ok:
            failures += 1
    if failures:
        print(f"# {failures} check(s) failed")
        return 1
    print("# all checks passed")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newtprofile",
        description=(
            "Minimum-resistance convex profiles in a variable-speed freestream "
            f"under the impact-pressure law (kernel backend: {BACKEND})"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_flow_options(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--velocity",
            type=_parse_coeffs,
            required=True,
            help="comma-separated polynomial coefficients, ascending powers "
            "(e.g. '0,0,0,-5' means -5x^3)",
        )
        p.add_argument("--rho", type=float, default=1.0, help="fluid density")
        p.add_argument("--a-min", type=float, default=0.0, help="apex range start")
        p.add_argument("--a-max", type=float, default=1.0, help="apex range end")
        p.add_argument(
            "--quad",
            choices=("simpson", "gauss"),
            default="simpson",
            help="quadrature method",
        )
        p.add_argument(
            "--quad-tol", type=float, default=1e-10, help="adaptive quadrature tolerance"
        )
        p.add_argument(
            "--nodes", type=int, default=64, help="Gauss-Legendre node count"
        )
        p.add_argument("--out", default=None, help="CSV output path (default stdout)")

    p_sweep = sub.add_parser("sweep", help="tabulate F(a) on an apex grid")
    add_flow_options(p_sweep)
    p_sweep.add_argument("--grid", type=int, default=101, help="number of apex samples")
    p_sweep.set_defaults(func=cmd_sweep)

    p_opt = sub.add_parser("optimize", help="locate the apex minimizing F(a)")
    add_flow_options(p_opt)
    p_opt.add_argument("--tol", type=float, default=1e-8, help="bracket width target")
    p_opt.set_defaults(func=cmd_optimize)

    p_prof = sub.add_parser("profile", help="sample one profile curve as CSV")
    p_prof.add_argument("--apex", type=float, required=True, help="apex parameter in [0, 1]")
    p_prof.add_argument("--samples", type=int, default=201, help="number of t samples")
    p_prof.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p_prof.set_defaults(func=cmd_profile)

    p_check = sub.add_parser("check", help="run the built-in consistency suites")
    p_check.set_defaults(func=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
