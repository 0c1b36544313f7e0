"""Truncated two-mode Fock-space oracle for the negativity.

Density operators live on the photon-number basis ``|n1, n2>`` with flat
index ``n1*(cutoff+1) + n2``.  The squeezed vacuum is written with
normalized amplitudes ``sqrt(1 - lam^2) * lam^n`` on ``|n, n>`` where
``lam = tanh(r)``, so the truncated trace is ``1 - lam^(2(cutoff+1))``.
Every state in scope has real amplitudes, so Hermitian means
real-symmetric throughout and the eigensolves run on the package's own
Jacobi kernel -- deliberately a generic dense solve, independent of the
closed forms and of the covariance-matrix path it is used to check.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import DEFAULT_MAX_SWEEPS, DEFAULT_TOL, jacobi_eigh
from .errors import (
    InternalConsistencyError,
    InvalidParameterError,
    NumericalFailureError,
    TruncationError,
)
from .measures import _require_prob, _require_squeeze

# The negativity's truncation error scales like the *amplitude* tail
# lam^(cutoff+1), not the trace tail lam^(2(cutoff+1)), so the automatic
# cutoff targets a 1e-16 trace deficit to keep negativities good to ~1e-7.
TAIL_TARGET = 1e-16  # auto cutoff aims below this trace deficit
TAIL_LIMIT = 1e-6    # constructors refuse anything worse
NEGATIVITY_TAIL_LIMIT = 1e-8
CUTOFF_CAP = 64

_SYMMETRY_TOL = 1e-12
_INPUT_SYMMETRY_TOL = 1e-10


def auto_cutoff(r):
    """Smallest cutoff with tanh(r)^(2(cutoff+1)) < 1e-16, capped at 64."""
    lam = math.tanh(_require_squeeze("r", r))
    if lam == 0.0:
        return 0
    if lam >= 1.0:  # tanh rounds to 1.0 for r >~ 19; no cutoff suffices
        return CUTOFF_CAP
    cutoff = max(0, math.ceil(math.log(TAIL_TARGET) / (2.0 * math.log(lam))) - 1)
    while lam ** (2 * (cutoff + 1)) >= TAIL_TARGET and cutoff < CUTOFF_CAP:
        cutoff += 1
    return min(cutoff, CUTOFF_CAP)


def _required_cutoff(lam, limit):
    cutoff = 0
    while lam ** (2 * (cutoff + 1)) > limit:
        cutoff += 1
    return cutoff


@dataclass(frozen=True)
class FockDensityOp:
    """Truncated two-mode density matrix with its truncation tail.

    ``matrix`` has dimension ``(cutoff+1)**2`` and is exactly symmetric;
    ``trace_deficit`` is ``1 - trace``, the weight lost to truncation.
    Positivity is not rechecked on every construction (the constructors
    below produce manifestly positive operators); use
    :meth:`validate_physical` on demand.
    """

    cutoff: int
    matrix: np.ndarray
    trace_deficit: float

    def __post_init__(self):
        cutoff = int(self.cutoff)
        if cutoff < 0:
            raise InvalidParameterError(f"cutoff must be >= 0, got {cutoff}")
        dim = (cutoff + 1) ** 2
        m = np.array(self.matrix, dtype=np.float64, copy=True)
        if m.shape != (dim, dim):
            raise InvalidParameterError(
                f"matrix shape {m.shape} does not match cutoff {cutoff}")
        if not np.all(np.isfinite(m)):
            raise InvalidParameterError("density matrix entries must be finite")
        if np.max(np.abs(m - m.T)) > _SYMMETRY_TOL:
            raise InvalidParameterError("density matrix must be symmetric to 1e-12")
        m = (m + m.T) / 2.0
        deficit = float(self.trace_deficit)
        if not 0.0 <= deficit < TAIL_LIMIT:
            raise TruncationError(
                f"trace deficit {deficit:.3e} outside [0, {TAIL_LIMIT})")
        trace = float(np.trace(m))
        if not 0.0 < trace <= 1.0 + 1e-12 or abs(trace + deficit - 1.0) > 1e-12:
            raise InvalidParameterError(
                f"trace {trace!r} inconsistent with deficit {deficit!r}")
        m.flags.writeable = False
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "trace_deficit", deficit)

    @property
    def dim(self):
        return (self.cutoff + 1) ** 2

    def validate_physical(self, floor=-1e-10):
        """Raise unless all eigenvalues are >= ``floor``."""
        low = hermitian_eigenvalues(self.matrix).values[0]
        if low < floor:
            raise InvalidParameterError(
                f"density matrix has eigenvalue {low} below {floor}")


@dataclass(frozen=True)
class EigenSpectrum:
    """Full real spectrum of a symmetric matrix, ascending."""

    values: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.values, dtype=np.float64)
        if w.ndim != 1 or w.size == 0 or np.any(np.diff(w) < 0):
            raise InvalidParameterError("spectrum must be a 1-D ascending array")
        w = w.copy()
        w.flags.writeable = False
        object.__setattr__(self, "values", w)


def tmsv_fock_density(r, cutoff=None):
    """Truncated density matrix of the two-mode squeezed vacuum.

    Entries ``(1 - lam^2) * lam^(m+n)`` on ``|m,m><n,n|`` with
    ``lam = tanh(r)``.  ``cutoff=None`` picks the smallest cutoff whose
    trace deficit is below 1e-16 (capped at 64).  A cutoff leaving a
    deficit above 1e-6 raises TruncationError carrying the smallest
    adequate cutoff.
    """
    r = _require_squeeze("r", r)
    lam = math.tanh(r)
    if cutoff is None:
        cutoff = auto_cutoff(r)
    cutoff = int(cutoff)
    if cutoff < 0:
        raise InvalidParameterError(f"cutoff must be >= 0, got {cutoff}")
    if lam >= 1.0:
        raise TruncationError(
            f"r = {r} saturates tanh in float64; no finite cutoff is adequate")
    deficit = lam ** (2 * (cutoff + 1))
    if deficit > TAIL_LIMIT:
        needed = _required_cutoff(lam, TAIL_LIMIT)
        raise TruncationError(
            f"cutoff {cutoff} leaves trace deficit {deficit:.3e} > {TAIL_LIMIT}; "
            f"need cutoff >= {needed} for r = {r}",
            required_cutoff=needed)
    d = cutoff + 1
    amps = math.sqrt(1.0 - lam * lam) * lam ** np.arange(d, dtype=np.float64)
    psi = np.zeros(d * d)
    psi[np.arange(d) * d + np.arange(d)] = amps
    return FockDensityOp(cutoff=cutoff, matrix=np.outer(psi, psi),
                         trace_deficit=deficit)


def mixture_density(p, r, cutoff=None):
    """Vacuum mixture: p * squeezed vacuum at r + (1 - p) * |0,0><0,0|."""
    p = _require_prob("p", p)
    squeezed = tmsv_fock_density(r, cutoff)
    m = p * squeezed.matrix
    m[0, 0] += 1.0 - p
    return FockDensityOp(cutoff=squeezed.cutoff, matrix=m,
                         trace_deficit=p * squeezed.trace_deficit)


def partial_transpose_fock(rho):
    """Partial transpose on the first mode.

    ``<m1,m2| PT |n1,n2> = <n1,m2| rho |m1,n2>``.  Accepts a FockDensityOp
    or a bare square matrix of dimension d^2; returns a plain symmetric
    matrix (possibly with negative eigenvalues).  Trace-preserving and an
    involution.
    """
    m = rho.matrix if isinstance(rho, FockDensityOp) else np.asarray(rho, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got shape {m.shape}")
    d = math.isqrt(m.shape[0])
    if d * d != m.shape[0]:
        raise InvalidParameterError(
            f"matrix dimension {m.shape[0]} is not a perfect square")
    return np.ascontiguousarray(
        m.reshape(d, d, d, d).transpose(2, 1, 0, 3).reshape(d * d, d * d))


def hermitian_eigenvalues(matrix, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """Full spectrum of a real symmetric matrix via the Jacobi kernel.

    The matrix must be symmetric to 1e-10.  The returned spectrum is
    validated against the trace and trace-of-square identities; a
    violation raises NumericalFailureError, as does exceeding the sweep
    budget.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.size == 0:
        raise InvalidParameterError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidParameterError("matrix entries must be finite")
    if np.max(np.abs(a - a.T)) > _INPUT_SYMMETRY_TOL:
        raise InvalidParameterError("matrix must be symmetric to 1e-10")
    w, _ = jacobi_eigh(a, compute_vectors=False, tol=tol, max_sweeps=max_sweeps)
    trace = float(np.trace(a))
    frob_sq = float(np.sum(a * a))
    scale = max(1.0, abs(trace), frob_sq)
    if (abs(float(np.sum(w)) - trace) > 1e-9 * scale
            or abs(float(np.sum(w * w)) - frob_sq) > 1e-9 * scale):
        raise NumericalFailureError(
            "eigenvalue trace identities violated; eigensolve is unreliable")
    return EigenSpectrum(w)


def negativity_numeric(rho):
    """Negativity from a dense eigensolve of the partial transpose.

    Returns the summed magnitude of the negative eigenvalues and checks
    it against the trace-norm reading (sum|eig| - trace)/2; disagreement
    beyond 1e-9 raises InternalConsistencyError.  Requires a trace
    deficit below 1e-8 so truncation cannot bias the answer.
    """
    if not isinstance(rho, FockDensityOp):
        raise InvalidParameterError("negativity_numeric expects a FockDensityOp")
    if rho.trace_deficit >= NEGATIVITY_TAIL_LIMIT:
        raise TruncationError(
            f"trace deficit {rho.trace_deficit:.3e} >= {NEGATIVITY_TAIL_LIMIT}; "
            "increase the cutoff before evaluating the negativity")
    pt = partial_transpose_fock(rho)
    w = hermitian_eigenvalues(pt).values
    neg_sum = -float(np.sum(w[w < 0.0]))
    trace_norm_reading = 0.5 * (float(np.sum(np.abs(w))) - float(np.trace(pt)))
    if abs(neg_sum - trace_norm_reading) > 1e-9:
        raise InternalConsistencyError(
            f"negativity readings disagree: sum of negatives {neg_sum} vs "
            f"trace-norm form {trace_norm_reading}")
    return neg_sum
