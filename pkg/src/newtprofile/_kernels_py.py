"""Pure-Python twins of the compiled quadrature kernels.

Selected by newtprofile._backend when the extension module is missing (or
when NEWTPROFILE_PURE_PYTHON is set).  Mirrors _kernels.pyx operation for
operation so both backends produce matching results.
"""

from __future__ import annotations

BACKEND = "python"


def poly_eval(coeffs, x: float) -> float:
    """Horner evaluation of a polynomial given ascending coefficients."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def integrand(a: float, t: float, coeffs) -> float:
    """Parametric resistance integrand v(x(t))^2 x'(t)^3 / (x'(t)^2 + y'(t)^2)."""
    return _integrand(a, t, tuple(coeffs))


def _integrand(a, t, coeffs):
    xt = 2.0 * a * t + (1.0 - 2.0 * a) * t * t
    dx = 2.0 * a + 2.0 * (1.0 - 2.0 * a) * t
    dy = 2.0 - 4.0 * t
    v = 0.0
    for c in reversed(coeffs):
        v = v * xt + c
    return v * v * dx * dx * dx / (dx * dx + dy * dy)


def force_adaptive(a: float, coeffs, abs_tol: float, max_depth: int) -> tuple[float, bool]:
    """Adaptive-Simpson integral of the resistance integrand over t in [0, 1].

    Returns (value, converged); converged is False when some interval hit
    max_depth with its error estimate still above tolerance.
    """
    cs = tuple(float(c) for c in coeffs)
    flag = [True]

    def recurse(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        flm = _integrand(a, 0.5 * (lo + mid), cs)
        frm = _integrand(a, 0.5 * (mid + hi), cs)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth <= 0:
            flag[0] = False
            return left + right + delta / 15.0
        return recurse(lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) + recurse(
            mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1
        )

    flo = _integrand(a, 0.0, cs)
    fmid = _integrand(a, 0.5, cs)
    fhi = _integrand(a, 1.0, cs)
    whole = (flo + 4.0 * fmid + fhi) / 6.0
    value = recurse(0.0, 1.0, flo, fmid, fhi, whole, abs_tol, max_depth)
    return value, flag[0]


def force_gauss(a: float, coeffs, nodes, weights) -> float:
    """Fixed-rule integral of the resistance integrand at the given nodes."""
    cs = tuple(float(c) for c in coeffs)
    total = 0.0
    for i in range(len(nodes)):
        total += weights[i] * _integrand(a, nodes[i], cs)
    return total
