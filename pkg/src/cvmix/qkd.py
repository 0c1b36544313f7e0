"""Key-rate analysis of the thermal-camouflaged beamsplitter attack.

Alice modulates coherent states with variance ``A`` (shot-noise units)
over a channel of efficiency ``eta``; the state entering the channel's
loss mode has variance ``N`` as seen by Alice and Bob.  Under reverse
reconciliation the distillable-rate difference is

    delta_I(A, eta, N) = 0.5 * log2( (eta/A + (1-eta)N)^-1 / (eta + (1-eta)N) )

in bits per channel use.  An eavesdropper may feed the loss mode a
vacuum mixture instead of a thermal state; matching the expected second
moments forces the mixture weight ``w = (N-1)/(N_p-1)`` (``N_p`` is the
variance of the squeezed component), and the true rate difference
becomes the convex combination

    delta_I_mix = w * delta_I(A, eta, N_p) + (1-w) * delta_I(A, eta, 1).

``advantage`` is delta_I - delta_I_mix; a positive value would mean the
mixed attack helps the eavesdropper.  ``delta_I`` is convex in ``N``, so
the advantage is never positive; ``advantage_search`` documents that over
a deterministic grid.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptySearchError,
    InfeasibleCamouflageError,
    InvalidParameterError,
    NumericalFailureError,
)

_NP_GRID_SHRINK = 1e-6  # offset above the open N_p > N endpoint


def _require_finite(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")
    return value


def _delta_I_raw(A, eta, N):
    # shared by the scalar path and the vectorized grid search
    return 0.5 * np.log2(1.0 / ((eta / A + (1.0 - eta) * N) * (eta + (1.0 - eta) * N)))


def delta_I(A, eta, N):
    """Rate difference in bits per use for modulation A, efficiency eta, noise N."""
    A = _require_finite("A", A)
    eta = _require_finite("eta", eta)
    N = _require_finite("N", N)
    if A < 1.0:
        raise InvalidParameterError(f"A must be >= 1, got {A}")
    if not 0.0 < eta <= 1.0:
        raise InvalidParameterError(f"eta must lie in (0, 1], got {eta}")
    if N < 1.0:
        raise InvalidParameterError(f"N must be >= 1, got {N}")
    arg = 1.0 / ((eta / A + (1.0 - eta) * N) * (eta + (1.0 - eta) * N))
    if not math.isfinite(arg) or arg <= 0.0:
        raise NumericalFailureError(f"log argument {arg!r} out of domain")
    return float(_delta_I_raw(A, eta, N))


def camouflage_probability(N, N_p):
    """Mixture weight matching the expected second moments: (N-1)/(N_p-1)."""
    N = _require_finite("N", N)
    N_p = _require_finite("N_p", N_p)
    if N < 1.0:
        raise InvalidParameterError(f"N must be >= 1, got {N}")
    if N_p <= N:
        raise InfeasibleCamouflageError(
            f"camouflage needs N_p > N, got N_p = {N_p}, N = {N}")
    return (N - 1.0) / (N_p - 1.0)


@dataclass(frozen=True)
class QkdParams:
    """One channel/attack parameter point: A > 1, 0 < eta < 1, N_p > N >= 1."""

    A: float
    eta: float
    N: float
    N_p: float

    def __post_init__(self):
        A = _require_finite("A", self.A)
        eta = _require_finite("eta", self.eta)
        N = _require_finite("N", self.N)
        N_p = _require_finite("N_p", self.N_p)
        if A <= 1.0:
            raise InvalidParameterError(f"A must be > 1, got {A}")
        if not 0.0 < eta < 1.0:
            raise InvalidParameterError(f"eta must lie in (0, 1), got {eta}")
        if N < 1.0:
            raise InvalidParameterError(f"N must be >= 1, got {N}")
        if N_p <= N:
            raise InvalidParameterError(f"N_p must exceed N, got {N_p} <= {N}")
        for name, value in (("A", A), ("eta", eta), ("N", N), ("N_p", N_p)):
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class RateBreakdown:
    """Gaussian, mixed and per-component rate differences at one point.

    delta_mix is exactly weight*delta_squeezed + (1-weight)*delta_vacuum;
    the constructor re-checks the identity.
    """

    delta_gaussian: float
    delta_mix: float
    delta_vacuum: float
    delta_squeezed: float
    weight: float

    def __post_init__(self):
        if not 0.0 <= self.weight < 1.0:
            raise InvalidParameterError(
                f"mixture weight must lie in [0, 1), got {self.weight}")
        recombined = (self.weight * self.delta_squeezed
                      + (1.0 - self.weight) * self.delta_vacuum)
        scale = max(1.0, abs(self.delta_vacuum), abs(self.delta_squeezed))
        if abs(self.delta_mix - recombined) > 1e-12 * scale:
            raise InvalidParameterError(
                "delta_mix is not the stated convex combination")


def delta_I_mix(A, eta, N, N_p):
    """Rate breakdown for the camouflaged vacuum-mixture attack."""
    weight = camouflage_probability(N, N_p)
    gaussian = delta_I(A, eta, N)
    vacuum = delta_I(A, eta, 1.0)
    squeezed = delta_I(A, eta, N_p)
    mix = weight * squeezed + (1.0 - weight) * vacuum
    return RateBreakdown(delta_gaussian=gaussian, delta_mix=mix,
                         delta_vacuum=vacuum, delta_squeezed=squeezed,
                         weight=weight)


def advantage(A, eta, N, N_p):
    """delta_I(A, eta, N) - delta_I_mix(A, eta, N, N_p); > 0 would help Eve."""
    breakdown = delta_I_mix(A, eta, N, N_p)
    return breakdown.delta_gaussian - breakdown.delta_mix


@dataclass(frozen=True)
class SearchResult:
    max_advantage: float
    argmax: QkdParams
    feasible_cells: int


def default_search_grid():
    """The default 4-D grid axes: (A values, eta values, N values).

    N_p is gridded per N as linspace(N + 1e-6, 20, 20); see
    ``advantage_search``.
    """
    a_values = np.geomspace(1.1, 100.0, 20)
    eta_values = np.linspace(0.02, 0.98, 25)
    n_values = np.linspace(1.01, 10.0, 20)
    return a_values, eta_values, n_values


def advantage_search(a_values, eta_values, n_values, np_values=None, *,
                     np_steps=20, np_max=20.0):
    """Maximum of ``advantage`` over a deterministic parameter grid.

    Axes are sorted ascending and evaluated with A outermost and N_p
    innermost, so the argmax is the lexicographically first maximizer in
    (A, eta, N, N_p).  When ``np_values`` is None, N_p is gridded per N
    as ``linspace(N + 1e-6, np_max, np_steps)``; otherwise the same
    ``np_values`` axis is used for every N and infeasible cells
    (N_p <= N) are skipped.  Raises EmptySearchError when no feasible
    cell remains.
    """
    a_grid = np.sort(np.asarray(a_values, dtype=np.float64))
    eta_grid = np.sort(np.asarray(eta_values, dtype=np.float64))
    n_grid = np.sort(np.asarray(n_values, dtype=np.float64))
    for name, grid in (("A", a_grid), ("eta", eta_grid), ("N", n_grid)):
        if grid.size == 0:
            raise EmptySearchError(f"empty {name} axis")
        if not np.all(np.isfinite(grid)):
            raise InvalidParameterError(f"{name} axis must be finite")
    if np.any(a_grid <= 1.0):
        raise InvalidParameterError("A axis must satisfy A > 1")
    if np.any((eta_grid <= 0.0) | (eta_grid >= 1.0)):
        raise InvalidParameterError("eta axis must lie in (0, 1)")
    if np.any(n_grid < 1.0):
        raise InvalidParameterError("N axis must satisfy N >= 1")

    if np_values is None:
        np_steps = int(np_steps)
        np_max = float(np_max)
        if np_steps < 1:
            raise InvalidParameterError("np_steps must be >= 1")
        if np_max <= float(n_grid[-1]) + _NP_GRID_SHRINK:
            raise InvalidParameterError(
                f"np_max = {np_max} must exceed every N value")
        # per-N axis over the open interval (N, np_max]
        np_grid = np.linspace(n_grid + _NP_GRID_SHRINK, np_max, np_steps, axis=-1)
    else:
        flat = np.sort(np.asarray(np_values, dtype=np.float64))
        if flat.size == 0:
            raise EmptySearchError("empty N_p axis")
        if not np.all(np.isfinite(flat)):
            raise InvalidParameterError("N_p axis must be finite")
        np_grid = np.broadcast_to(flat, (n_grid.size, flat.size))

    feasible = np_grid > n_grid[:, None]
    if not np.any(feasible):
        raise EmptySearchError("no grid cell satisfies N_p > N")

    # weights per (N, N_p); guarded where infeasible to avoid 0/0
    denom = np.where(feasible, np_grid - 1.0, 1.0)
    weight = np.where(feasible, (n_grid[:, None] - 1.0) / denom, 0.0)

    a4 = a_grid[:, None, None, None]
    eta4 = eta_grid[None, :, None, None]
    d_gauss = _delta_I_raw(a4, eta4, n_grid[None, None, :, None])
    d_vac = _delta_I_raw(a4, eta4, 1.0)
    d_sq = _delta_I_raw(a4, eta4, np_grid[None, None, :, :])
    adv = d_gauss - (weight * d_sq + (1.0 - weight) * d_vac)

    adv = np.where(feasible[None, None, :, :], adv, -np.inf)
    flat_index = int(np.argmax(adv))  # first maximizer in C order
    ia, ie, inn, inp = np.unravel_index(flat_index, adv.shape)
    best = QkdParams(A=float(a_grid[ia]), eta=float(eta_grid[ie]),
                     N=float(n_grid[inn]), N_p=float(np_grid[inn, inp]))
    cells = int(np.count_nonzero(feasible)) * a_grid.size * eta_grid.size
    return SearchResult(max_advantage=float(adv[ia, ie, inn, inp]),
                        argmax=best, feasible_cells=cells)
