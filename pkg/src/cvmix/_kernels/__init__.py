"""Eigensolver kernels: compiled extension when available, numpy fallback.

The backend is chosen once at import.  Set ``CVMIX_PURE_KERNELS=1`` in the
environment to force the pure-Python backend even when the compiled one is
installed (used by the benchmark and by tests).
"""

import os

import numpy as np

from ..errors import NumericalFailureError
from . import jacobi_py

DEFAULT_TOL = 1e-11
DEFAULT_MAX_SWEEPS = 100

_BACKENDS = {"pure": jacobi_py}
try:
    from . import _jacobi

    _BACKENDS["compiled"] = _jacobi
except ImportError:
    _jacobi = None

if os.environ.get("CVMIX_PURE_KERNELS"):
    BACKEND = "pure"
elif _jacobi is not None:
    BACKEND = "compiled"
else:
    BACKEND = "pure"


def available_backends():
    """Names of the usable backends ('pure' is always present)."""
    return tuple(sorted(_BACKENDS))


def jacobi_eigh(matrix, compute_vectors=False, tol=DEFAULT_TOL,
                max_sweeps=DEFAULT_MAX_SWEEPS, backend=None):
    """Eigendecompose a real symmetric matrix with cyclic Jacobi rotations.

    Parameters
    ----------
    matrix : (n, n) array_like
        Real symmetric matrix; a float64 copy is worked on.
    compute_vectors : bool
        Also accumulate eigenvectors (columns aligned with the values).
    tol : float
        Off-diagonal Frobenius norm at which the sweep loop stops,
        relative to the input scale max(1, ||matrix||_F).
    max_sweeps : int
        Full-sweep budget; exceeding it raises NumericalFailureError.
    backend : str or None
        'compiled' or 'pure'; None uses the backend selected at import.

    Returns
    -------
    (values, vectors) with values ascending; vectors is None unless
    requested.
    """
    a = np.array(matrix, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    name = BACKEND if backend is None else backend
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    impl = _BACKENDS[name]
    n = a.shape[0]
    v = np.eye(n) if compute_vectors else np.zeros((1, 1))
    sweeps, converged = impl.jacobi_sweeps(a, v, compute_vectors, tol, max_sweeps)
    if not converged:
        raise NumericalFailureError(
            f"Jacobi eigensolver did not converge within its budget of "
            f"{max_sweeps} full sweeps (n={n})")
    w = np.diagonal(a).copy()
    order = np.argsort(w, kind="stable")
    if compute_vectors:
        return w[order], v[:, order]
    return w[order], None
