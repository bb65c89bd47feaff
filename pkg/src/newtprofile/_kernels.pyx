# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels for the resistance-force hot path.

The twin module _kernels_py.py provides the same functions in pure Python;
keep both in lockstep.
"""

from libc.math cimport fabs

BACKEND = "compiled"


cdef double _poly_eval(const double* coeffs, Py_ssize_t n, double x) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i
    for i in range(n - 1, -1, -1):
        acc = acc * x + coeffs[i]
    return acc


cdef double _integrand(double a, double t, const double* coeffs, Py_ssize_t n) noexcept nogil:
    cdef double xt = 2.0 * a * t + (1.0 - 2.0 * a) * t * t
    cdef double dx = 2.0 * a + 2.0 * (1.0 - 2.0 * a) * t
    cdef double dy = 2.0 - 4.0 * t
    cdef double v = _poly_eval(coeffs, n, xt)
    return v * v * dx * dx * dx / (dx * dx + dy * dy)


cdef double _recurse(double a, const double* coeffs, Py_ssize_t n,
                     double lo, double hi, double flo, double fmid, double fhi,
                     double whole, double tol, int depth, bint* converged) noexcept nogil:
    cdef double mid = 0.5 * (lo + hi)
    cdef double flm = _integrand(a, 0.5 * (lo + mid), coeffs, n)
    cdef double frm = _integrand(a, 0.5 * (mid + hi), coeffs, n)
    cdef double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
    cdef double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
    cdef double delta = left + right - whole
    if fabs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        converged[0] = False
        return left + right + delta / 15.0
    return (_recurse(a, coeffs, n, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1, converged)
            + _recurse(a, coeffs, n, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1, converged))


def poly_eval(coeffs, double x):
    """Horner evaluation of a polynomial given ascending coefficients."""
    cdef const double[::1] cv = coeffs
    return _poly_eval(&cv[0], cv.shape[0], x) if cv.shape[0] else 0.0


def integrand(double a, double t, coeffs):
    """Parametric resistance integrand v(x(t))^2 x'(t)^3 / (x'(t)^2 + y'(t)^2)."""
    cdef const double[::1] cv = coeffs
    if cv.shape[0] == 0:
        return 0.0
    return _integrand(a, t, &cv[0], cv.shape[0])


def force_adaptive(double a, coeffs, double abs_tol, int max_depth):
    """Adaptive-Simpson integral of the resistance integrand over t in [0, 1].

    Returns (value, converged); converged is False when some interval hit
    max_depth with its error estimate still above tolerance.
    """
    cdef const double[::1] cv = coeffs
    cdef Py_ssize_t n = cv.shape[0]
    cdef bint converged = True
    cdef double flo, fmid, fhi, whole, value
    if n == 0:
        return 0.0, True
    flo = _integrand(a, 0.0, &cv[0], n)
    fmid = _integrand(a, 0.5, &cv[0], n)
    fhi = _integrand(a, 1.0, &cv[0], n)
    whole = (flo + 4.0 * fmid + fhi) / 6.0
    value = _recurse(a, &cv[0], n, 0.0, 1.0, flo, fmid, fhi, whole,
                     abs_tol, max_depth, &converged)
    return value, bool(converged)


def force_gauss(double a, coeffs, nodes, weights):
    """Fixed-rule integral of the resistance integrand at the given nodes."""
    cdef const double[::1] cv = coeffs
    cdef const double[::1] xs = nodes
    cdef const double[::1] ws = weights
    cdef Py_ssize_t n = cv.shape[0]
    cdef double total = 0.0
    cdef Py_ssize_t i
    if n == 0:
        return 0.0
    for i in range(xs.shape[0]):
        total += ws[i] * _integrand(a, xs[i], &cv[0], n)
    return total
