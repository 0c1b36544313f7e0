"""Covariance-matrix algebra for two-mode Gaussian states and mixtures.

Conventions: quadrature order is ``(x1, p1, x2, p2)``, covariance entries
are symmetrized second moments, and the vacuum covariance is the identity
(shot noise has unit variance).  The symplectic form is
``Omega = blockdiag(J, J)`` with ``J = [[0, 1], [-1, 0]]``.

All operations are pure functions over immutable values and are safe for
unrestricted concurrent use.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NumericalFailureError
from .measures import MixtureSpec, _require_prob, _require_squeeze

_J = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = np.block([[_J, np.zeros((2, 2))], [np.zeros((2, 2)), _J]])
OMEGA.flags.writeable = False

# constructor rejects asymmetry above this, then symmetrizes exactly
_SYMMETRY_REJECT = 1e-9
_PHYSICALITY_SLACK = 1e-9


@dataclass(frozen=True)
class CovarianceState:
    """4x4 second-moment matrix of a zero-mean two-mode state.

    The stored matrix is exactly symmetric (the constructor symmetrizes
    via (V + V^T)/2 after rejecting asymmetries above 1e-9) and is made
    read-only.  Physicality (all symplectic eigenvalues >= 1) is *not*
    enforced at construction so that partially transposed matrices can
    flow through the same type; call :meth:`is_physical` on demand.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.float64, copy=True)
        if m.shape != (4, 4):
            raise InvalidParameterError(
                f"covariance matrix must be 4x4, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidParameterError("covariance matrix entries must be finite")
        if np.max(np.abs(m - m.T)) > _SYMMETRY_REJECT:
            raise InvalidParameterError(
                "covariance matrix is not symmetric within 1e-9")
        m = (m + m.T) / 2.0
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def is_physical(self, slack=_PHYSICALITY_SLACK):
        """Uncertainty-relation check: smallest symplectic eigenvalue >= 1 - slack."""
        return symplectic_eigenvalues(self).values[0] >= 1.0 - slack


@dataclass(frozen=True)
class SymplecticSpectrum:
    """The two symplectic eigenvalues of a two-mode covariance matrix, ascending."""

    values: tuple

    def __post_init__(self):
        nu = tuple(float(v) for v in self.values)
        if len(nu) != 2 or nu[0] > nu[1] or nu[0] <= 0.0:
            raise InvalidParameterError(
                f"symplectic spectrum must be two positive ascending values, got {nu}")
        object.__setattr__(self, "values", nu)


def tmsv_covariance(r):
    """Covariance matrix of a two-mode squeezed vacuum.

    Diagonal cosh(2r); x1-x2 correlation -sinh(2r); p1-p2 correlation
    +sinh(2r).  ``r`` is the squeeze strength, real and >= 0.
    """
    r = _require_squeeze("r", r)
    ch = math.cosh(2.0 * r)
    sh = math.sinh(2.0 * r)
    m = np.array([
        [ch, 0.0, -sh, 0.0],
        [0.0, ch, 0.0, sh],
        [-sh, 0.0, ch, 0.0],
        [0.0, sh, 0.0, ch],
    ])
    return CovarianceState(m)


def mixture_covariance(spec):
    """Covariance of a weighted blend of squeezed vacua.

    Every component is zero-mean, so the second moments are just the
    weight-convex combination of the component covariances.
    """
    if not isinstance(spec, MixtureSpec):
        spec = MixtureSpec(tuple(spec))
    m = np.zeros((4, 4))
    for weight, r in spec.components:
        m += weight * tmsv_covariance(r).matrix
    return CovarianceState(m)


def apply_continuous_loss(state, eta):
    """Equal beamsplitter loss on both modes with vacuum entering the loss ports.

    Maps V to eta*V + (1 - eta)*Identity; ``eta`` is the intensity
    transmission in [0, 1].
    """
    eta = _require_prob("eta", eta)
    return CovarianceState(eta * state.matrix + (1.0 - eta) * np.eye(4))


def duan_inseparability(state):
    """Quadrature-variance sum 0.25*Var(x1 + x2) + 0.25*Var(p1 - p2).

    A value below 1 is sufficient for entanglement when the state carries
    symmetric correlations in the standard form, as every constructor in
    this module guarantees.
    """
    m = state.matrix
    x_part = m[0, 0] + m[2, 2] + 2.0 * m[0, 2]
    p_part = m[1, 1] + m[3, 3] - 2.0 * m[1, 3]
    return 0.25 * (x_part + p_part)


def pt_covariance(state):
    """Covariance-level partial transpose: sign flip of mode 2's momentum.

    Applies V -> L V L with L = diag(1, 1, 1, -1); an involution.  The
    result is generally unphysical, which is what the negativity reads off.
    """
    m = state.matrix.copy()
    m[3, :] *= -1.0
    m[:, 3] *= -1.0
    return CovarianceState(m)


def symplectic_eigenvalues(state):
    """Symplectic spectrum from the general eigenproblem of i*Omega*V.

    The eigenvalues of i*Omega*V come in +/- pairs whose moduli are the
    symplectic eigenvalues; returned ascending.
    """
    try:
        eigs = np.linalg.eigvals(1j * OMEGA @ state.matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"eigensolve of i*Omega*V failed: {exc}") from exc
    mods = np.sort(np.abs(eigs))
    nu1 = float(mods[0] + mods[1]) / 2.0
    nu2 = float(mods[2] + mods[3]) / 2.0
    return SymplecticSpectrum((nu1, nu2))


def gaussian_negativity_from_cm(state):
    """Negativity of a Gaussian state from its covariance matrix.

    Uses trace_norm(PT) = prod over symplectic eigenvalues nu of the
    partially transposed matrix of max(1, 1/nu); the negativity is
    (trace_norm - 1)/2, zero iff no nu falls below 1.  Eigenvalues within
    1e-12 of the separability boundary nu = 1 count as 1, so separable
    inputs yield exactly zero despite eigensolver rounding.
    """
    trace_norm = 1.0
    for nu in symplectic_eigenvalues(pt_covariance(state)).values:
        if nu < 1.0 - 1e-12:
            trace_norm /= nu
    return (trace_norm - 1.0) / 2.0
