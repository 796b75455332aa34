# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Sturm sign count and RK4 stepping.

Same arithmetic, same operation order as kernels/pykernels.py.
"""

import numpy as np

BACKEND_NAME = "cython"

cdef double _PIVOT_FLOOR = 1e-300


def sturm_count(diag, off, double shift):
    """Number of eigenvalues of a symmetric tridiagonal matrix below shift."""
    cdef const double[::1] d = np.ascontiguousarray(diag, dtype=np.float64)
    cdef const double[::1] e = np.ascontiguousarray(off, dtype=np.float64)
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i
    cdef int count = 0
    cdef double q = 1.0
    for i in range(n):
        if i == 0:
            q = d[0] - shift
        else:
            q = (d[i] - shift) - e[i - 1] * e[i - 1] / q
        if q == 0.0:
            q = -_PIVOT_FLOOR
        if q < 0.0:
            count += 1
    return count


def rk4_lienard(double k, double omega, double x0, double v0,
                double step, Py_ssize_t n_steps):
    """Fixed-step RK4 for x'' + k x x' + (k^2/9) x^3 + omega^2 x = 0."""
    cdef double kk9 = k * k / 9.0
    cdef double w2 = omega * omega
    xs_arr = np.empty(n_steps + 1)
    vs_arr = np.empty(n_steps + 1)
    cdef double[::1] xs = xs_arr
    cdef double[::1] vs = vs_arr
    cdef double x = x0, v = v0, h = step
    cdef double a1, a2, a3, a4, x2, v2, x3, v3, x4, v4
    cdef Py_ssize_t i
    xs[0] = x
    vs[0] = v
    for i in range(1, n_steps + 1):
        a1 = -k * x * v - kk9 * x ** 3 - w2 * x
        x2 = x + 0.5 * h * v
        v2 = v + 0.5 * h * a1
        a2 = -k * x2 * v2 - kk9 * x2 ** 3 - w2 * x2
        x3 = x + 0.5 * h * v2
        v3 = v + 0.5 * h * a2
        a3 = -k * x3 * v3 - kk9 * x3 ** 3 - w2 * x3
        x4 = x + h * v3
        v4 = v + h * a3
        a4 = -k * x4 * v4 - kk9 * x4 ** 3 - w2 * x4
        x = x + h / 6.0 * (v + 2.0 * v2 + 2.0 * v3 + v4)
        v = v + h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        xs[i] = x
        vs[i] = v
    return xs_arr, vs_arr
