# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigensolver, compiled kernel.

Same algorithm as ``jacobi_py``: cyclic-by-rows Givens rotations, exact-zero
skip, Numerical-Recipes-style clearing of entries negligible against the
diagonal.  Convergence is declared when the off-diagonal Frobenius norm
falls below ``tol`` relative to the input scale.
"""

from libc.math cimport fabs, sqrt


cdef double _offdiag_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t p, q
    cdef double off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += a[p, q] * a[p, q]
    return sqrt(2.0 * off)


def jacobi_sweeps(double[:, ::1] a, double[:, ::1] v, bint want_v,
                  double tol, int max_sweeps):
    """In-place Jacobi sweeps; returns (sweeps_done, converged)."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double frob0, threshold, apq, app, aqq, g, h, theta, t, c, s, tau
    cdef double aip, aiq, vip, viq
    if n < 2:
        return 0, True
    frob0 = 0.0
    for p in range(n):
        for q in range(n):
            frob0 += a[p, q] * a[p, q]
    frob0 = sqrt(frob0)
    threshold = tol * (frob0 if frob0 > 1.0 else 1.0)
    for sweep in range(max_sweeps):
        if _offdiag_norm(a, n) <= threshold:
            return sweep, True
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                g = 100.0 * fabs(apq)
                if fabs(app) + g == fabs(app) and fabs(aqq) + g == fabs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                h = aqq - app
                if fabs(h) + g == fabs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (fabs(theta) + sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = aip - s * (aiq + tau * aip)
                    a[p, i] = a[i, p]
                    a[i, q] = aiq + s * (aip - tau * aiq)
                    a[q, i] = a[i, q]
                if want_v:
                    for i in range(n):
                        vip = v[i, p]
                        viq = v[i, q]
                        v[i, p] = vip - s * (viq + tau * vip)
                        v[i, q] = viq + s * (vip - tau * viq)
    return max_sweeps, _offdiag_norm(a, n) <= threshold
