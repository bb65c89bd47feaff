#!/usr/bin/env python3
"""Benchmark the compiled quadrature kernels against the pure-Python twins.

Times the force-evaluation hot path (a single adaptive integral, a 64-node
Gauss-Legendre integral, and a 101-point sweep worth of integrals) on each
available backend, and optionally the full CLI optimize run end to end in
a subprocess per backend.

Usage:
    python benchmarks/bench_backends.py [--repeats 7] [--end-to-end]
"""

from __future__ import annotations

import argparse
import os
import statistics
import subprocess
import sys
import time

import numpy as np

import newtprofile._kernels_py as kernels_py
from newtprofile.quadrature import gauss_legendre_nodes

try:
    import newtprofile._kernels as kernels_cy
except ImportError:
    kernels_cy = None

COEFFS = np.ascontiguousarray([0.0, 0.0, 0.0, -1.0])  # normalized -5x^3 case
APEX = 0.682564


def time_call(fn, repeats: int) -> float:
    """Median wall time of fn() over the given number of repeats."""
    fn()  # warm up
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench_backend(kernels, repeats: int) -> dict[str, float]:
    nodes, weights = gauss_legendre_nodes(64)
    apex_grid = np.linspace(0.0, 1.0, 101)

    def single_adaptive():
        kernels.force_adaptive(APEX, COEFFS, 1e-10, 40)

    def single_gauss():
        kernels.force_gauss(APEX, COEFFS, nodes, weights)

    def sweep_adaptive():
        for a in apex_grid:
            kernels.force_adaptive(float(a), COEFFS, 1e-10, 40)

    return {
        "adaptive force (1 eval)": time_call(single_adaptive, repeats),
        "gauss-64 force (1 eval)": time_call(single_gauss, repeats),
        "adaptive sweep (101 evals)": time_call(sweep_adaptive, max(3, repeats // 2)),
    }


def check_agreement() -> float:
    if kernels_cy is None:
        return 0.0
    worst = 0.0
    for a in np.linspace(0.0, 1.0, 41):
        vc, _ = kernels_cy.force_adaptive(float(a), COEFFS, 1e-10, 40)
        vp, _ = kernels_py.force_adaptive(float(a), COEFFS, 1e-10, 40)
        worst = max(worst, abs(vc - vp) / max(abs(vp), 1e-30))
    return worst


def bench_end_to_end() -> None:
    command = [
        sys.executable,
        "-m",
        "newtprofile",
        "optimize",
        "--velocity",
        "0,0,0,-5",
    ]
    print("\nend-to-end CLI optimize (subprocess, includes interpreter startup):")
    for label, env_extra in (("compiled", {}), ("python", {"NEWTPROFILE_PURE_PYTHON": "1"})):
        env = dict(os.environ, **env_extra)
        start = time.perf_counter()
        result = subprocess.run(command, env=env, capture_output=True, text=True)
        elapsed = time.perf_counter() - start
        status = "ok" if result.returncode == 0 else f"exit {result.returncode}"
        print(f"  {label:<9} {elapsed * 1e3:8.1f} ms  ({status})")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=7)
    parser.add_argument(
        "--end-to-end",
        action="store_true",
        help="also time the full CLI optimize run per backend in subprocesses",
    )
    args = parser.parse_args()

    results = {"python": bench_backend(kernels_py, args.repeats)}
    if kernels_cy is not None:
        results["compiled"] = bench_backend(kernels_cy, args.repeats)
    else:
        print("compiled kernels not built; benchmarking the pure-Python backend only")

    labels = list(next(iter(results.values())))
    print(f"{'kernel benchmark':<28} {'python':>12}", end="")
    if "compiled" in results:
        print(f" {'compiled':>12} {'speedup':>9}")
    else:
        print()
    for label in labels:
        py_time = results["python"][label]
        print(f"{label:<28} {py_time * 1e6:>10.1f}us", end="")
        if "compiled" in results:
            cy_time = results["compiled"][label]
            print(f" {cy_time * 1e6:>10.1f}us {py_time / cy_time:>8.1f}x")
        else:
            print()

    worst = check_agreement()
    if kernels_cy is not None:
        print(f"\nmax rel force disagreement between backends: {worst:.3g}")

    if args.end_to_end:
        bench_end_to_end()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
