# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled kernels: order-statistic quantiles, the ratio-covariance matrix
sum, and the Gini estimate with its influence-term sum of squares.

Semantics match qrineq._kernels._pure exactly (up to floating-point
summation order).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport floor

cnp.import_array()

BACKEND_NAME = "ext"


def hf8(const double[::1] values, ps):
    """Order-statistic quantile with plotting position (n + 1/3) p + 1/3."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ps_arr = \
        np.ascontiguousarray(ps, dtype=np.float64)
    cdef double[::1] pv = ps_arr
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t m = pv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double h, g, lo, hi
    cdef double nf = <double> n
    for i in range(m):
        h = (nf + 1.0 / 3.0) * pv[i] + 1.0 / 3.0
        if h < 1.0:
            h = 1.0
        elif h > nf:
            h = nf
        k = <Py_ssize_t> floor(h)
        g = h - k
        lo = values[k - 1]
        hi = values[k if k < n else n - 1]
        ov[i] = lo + g * (hi - lo)
    return out


def sigma_matrix_sum(const double[::1] half_p, const double[::1] xa, const double[::1] xb,
                     const double[::1] qa, const double[::1] qb):
    """Sum of the full J x J asymptotic covariance matrix of ratio ordinates."""
    cdef Py_ssize_t J = half_p.shape[0]
    cdef Py_ssize_t i, j
    cdef double total = 0.0
    cdef double hp_i, hp_j, r_i, r_j, cell
    for i in range(J):
        hp_i = half_p[i]
        r_i = xa[i] / xb[i]
        total += (hp_i * (1.0 - hp_i) * (qa[i] * qa[i] + r_i * r_i * qb[i] * qb[i])
                  - 2.0 * hp_i * hp_i * r_i * qa[i] * qb[i]) / (xb[i] * xb[i])
        for j in range(i + 1, J):
            hp_j = half_p[j]
            r_j = xa[j] / xb[j]
            cell = (hp_i * (1.0 - hp_j)
                    * (qa[i] * qa[j] + r_i * r_j * qb[i] * qb[j])
                    - hp_i * hp_j
                    * (r_j * qa[i] * qb[j] + r_i * qb[i] * qa[j])) \
                / (xb[i] * xb[j])
            total += 2.0 * cell
    return total


def gini_coeff(const double[::1] values):
    """Order-statistic Gini estimate 2 sum(i x_(i)) / (n^2 xbar) - (n+1)/n."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t i
    cdef double weighted = 0.0, total = 0.0
    for i in range(n):
        weighted += (i + 1.0) * values[i]
        total += values[i]
    return 2.0 * weighted / (n * total) - (n + 1.0) / n


def gini_zsum(const double[::1] values, double g):
    """Centered sum of squares of the Gini influence terms."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t i
    cdef double prefix = 0.0, zmean = 0.0, zsum = 0.0, z
    cdef cnp.ndarray[cnp.float64_t, ndim=1] zbuf = np.empty(n, dtype=np.float64)
    cdef double[::1] zv = zbuf
    for i in range(n):
        prefix += values[i]
        z = (-(g + 1.0) + (2.0 * (i + 1.0) - 1.0) / n) * values[i] \
            - (2.0 / n) * prefix
        zv[i] = z
        zmean += z
    zmean /= n
    for i in range(n):
        z = zv[i] - zmean
        zsum += z * z
    return zsum
