"""Cyclic Jacobi eigensolver, pure numpy fallback.

Implements the same sweep structure as the compiled kernel in
``_jacobi.pyx``: cyclic-by-rows Givens rotations with an exact-zero skip
and Numerical-Recipes-style clearing of entries that are negligible
against the diagonal.  The zero skip makes the block-sparse partial
transposes produced by ``fock_oracle`` converge in a handful of sweeps;
dense matrices behave like classic cyclic Jacobi.

Rotations are applied with vectorized column updates, so this backend is
usable (if slower) up to a few hundred rows.  The per-sweep candidate
scan allocates O(n^2) index arrays; very large matrices belong on the
compiled backend.
"""

import numpy as np


def jacobi_sweeps(a, v, want_v, tol, max_sweeps):
    """Run in-place Jacobi sweeps on the symmetric matrix ``a``.

    On convergence the diagonal of ``a`` carries the eigenvalues and,
    when ``want_v``, ``v`` accumulates the rotations (columns align with
    the diagonal).  Returns ``(sweeps_done, converged)``; convergence
    means the off-diagonal Frobenius norm fell below ``tol`` relative to
    the input scale.
    """
    n = a.shape[0]
    if n < 2:
        return 0, True
    frob0 = float(np.linalg.norm(a))
    threshold = tol * max(1.0, frob0)
    rows, cols = np.triu_indices(n, 1)
    for sweep in range(max_sweeps):
        # off-diagonal norm from the entries themselves (a difference of
        # full and diagonal Frobenius norms would cancel catastrophically)
        flat = a[rows, cols]
        if np.sqrt(2.0 * float(flat @ flat)) <= threshold:
            return sweep, True
        # candidate pairs with nonzero entries, row-cyclic order; fill
        # created mid-sweep is picked up on the next sweep
        candidates = np.nonzero(flat)[0]
        for k in candidates:
            p = int(rows[k])
            q = int(cols[k])
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            g = 100.0 * abs(apq)
            if abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                a[p, q] = 0.0
                a[q, p] = 0.0
                continue
            h = aqq - app
            if abs(h) + g == abs(h):
                t = apq / h
            else:
                theta = 0.5 * h / apq
                t = 1.0 / (abs(theta) + np.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            tau = s / (1.0 + c)
            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            new_p = col_p - s * (col_q + tau * col_p)
            new_q = col_q + s * (col_p - tau * col_q)
            a[:, p] = new_p
            a[p, :] = new_p
            a[:, q] = new_q
            a[q, :] = new_q
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0
            if want_v:
                v_p = v[:, p].copy()
                v_q = v[:, q].copy()
                v[:, p] = v_p - s * (v_q + tau * v_p)
                v[:, q] = v_q + s * (v_p - tau * v_q)
    flat = a[rows, cols]
    return max_sweeps, np.sqrt(2.0 * float(flat @ flat)) <= threshold
