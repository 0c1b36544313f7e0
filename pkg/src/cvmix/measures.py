"""Closed-form entanglement and teleportation-fidelity measures.

The states handled here are two-mode squeezed vacua with squeeze strength
``r`` and their classical blends with the vacuum: squeezed component with
probability ``p``, vacuum otherwise.  Two parameterizations are used
throughout and converted explicitly:

* ``(p, r)`` -- mixture weight and squeeze strength;
* ``(p, insep)`` -- mixture weight and the shared inseparability value
  ``I = p*exp(-2r) + (1-p)``, the quadrature-variance sum that a pure
  state with squeeze ``s = -ln(I)/2`` matches exactly.

``insep`` ranges over ``(1-p, 1]`` for finite squeezing; the lower
boundary is the infinite-squeezing limit.  The mixed-state negativity has
a pole there, so ``negativity_vs_I`` requires ``insep > 1-p`` strictly,
while the fidelity formulas stay regular and ``fidelity_vs_I`` accepts
the boundary.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InfeasibleComparisonError,
    InternalConsistencyError,
    InvalidParameterError,
)

_WEIGHT_SUM_TOL = 1e-12


def _require_finite(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")
    return value


def _require_squeeze(name, value):
    value = _require_finite(name, value)
    if value < 0.0:
        raise InvalidParameterError(f"{name} must be >= 0, got {value}")
    return value


def _require_prob(name, value):
    value = _require_finite(name, value)
    if not 0.0 <= value <= 1.0:
        raise InvalidParameterError(f"{name} must lie in [0, 1], got {value}")
    return value


@dataclass(frozen=True)
class MixtureSpec:
    """Weighted blend of two-mode squeezed-vacuum components.

    ``components`` is a sequence of ``(weight, r)`` pairs; the weights are
    probabilities summing to one and each ``r >= 0`` is the squeeze
    strength of its component.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(
            (_require_prob("weight", w), _require_squeeze("r", r))
            for w, r in self.components
        )
        if not comps:
            raise InvalidParameterError("mixture needs at least one component")
        total = math.fsum(w for w, _ in comps)
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise InvalidParameterError(
                f"mixture weights must sum to 1 (got {total!r})")
        object.__setattr__(self, "components", comps)

    @classmethod
    def vacuum_mixture(cls, p, r):
        """Squeezed vacuum at ``r`` with probability ``p``, vacuum otherwise."""
        p = _require_prob("p", p)
        return cls(((p, r), (1.0 - p, 0.0)))


@dataclass(frozen=True)
class ComparisonPoint:
    """Mixed vs pure values at one equal-inseparability point.

    ``gap`` is ``mixed - pure`` evaluated through its simplified closed
    form; construction checks that it agrees with the direct difference.
    """

    p: float
    insep: float
    mixed: float
    pure: float
    gap: float

    def __post_init__(self):
        if not 0.0 < self.p <= 1.0:
            raise InvalidParameterError(f"p must lie in (0, 1], got {self.p}")
        if not (1.0 - self.p) <= self.insep <= 1.0:
            raise InvalidParameterError(
                f"insep={self.insep} outside [1-p, 1] for p={self.p}")
        scale = max(1.0, abs(self.mixed), abs(self.pure))
        if abs(self.gap - (self.mixed - self.pure)) > 1e-13 * scale:
            raise InternalConsistencyError(
                "gap closed form disagrees with mixed - pure at "
                f"(p={self.p}, insep={self.insep})")


def pure_negativity(r):
    """Negativity of the squeezed vacuum: (exp(2r) - 1) / 2."""
    r = _require_squeeze("r", r)
    return math.expm1(2.0 * r) / 2.0


def mixture_negativity(p, r):
    """Negativity of the vacuum mixture: p * (exp(2r) - 1) / 2."""
    p = _require_prob("p", p)
    return p * pure_negativity(r)


def inseparability_mixture(p, r):
    """Inseparability value of the vacuum mixture: p*exp(-2r) + (1 - p)."""
    p = _require_prob("p", p)
    r = _require_squeeze("r", r)
    return 1.0 + p * math.expm1(-2.0 * r)


def matched_squeeze(insep):
    """Pure-state squeeze with the same inseparability value: -ln(insep)/2."""
    insep = _require_finite("insep", insep)
    if not 0.0 < insep <= 1.0:
        raise InvalidParameterError(
            f"insep must lie in (0, 1], got {insep}")
    return -0.5 * math.log(insep)


def _check_comparison_domain(p, insep, *, strict):
    p = _require_finite("p", p)
    insep = _require_finite("insep", insep)
    if not 0.0 < p <= 1.0:
        raise InvalidParameterError(f"p must lie in (0, 1], got {p}")
    if insep > 1.0:
        raise InvalidParameterError(f"insep must be <= 1, got {insep}")
    floor = 1.0 - p
    if insep < floor or (strict and insep == floor):
        raise InfeasibleComparisonError(
            f"insep={insep} infeasible for p={p}: need insep "
            f"{'>' if strict else '>='} {floor}")
    return p, insep


def negativity_vs_I(p, insep):
    """Mixed and pure negativities at equal inseparability value.

    mixed = p^2 / (2(insep + p - 1)) - p/2, pure = (1/insep - 1)/2; the
    gap simplifies to (1-p)(insep-1)^2 / (2 insep (insep - 1 + p)), which
    is positive throughout the feasible region.  The mixed-state formula
    has a pole at insep = 1 - p, so that boundary is rejected.
    """
    p, insep = _check_comparison_domain(p, insep, strict=True)
    # one shared pole denominator, grouped so the O(1) subtraction happens
    # first: keeps mixed and gap consistent arbitrarily close to the pole
    denom = (insep - 1.0) + p
    mixed = p * p / (2.0 * denom) - p / 2.0
    pure = (1.0 / insep - 1.0) / 2.0
    gap = (1.0 - p) * (insep - 1.0) ** 2 / (2.0 * insep * denom)
    return ComparisonPoint(p=p, insep=insep, mixed=mixed, pure=pure, gap=gap)


def fidelity_pure(r):
    """Unity-gain coherent-state teleportation fidelity: 1/(1 + exp(-2r))."""
    r = _require_squeeze("r", r)
    return 1.0 / (1.0 + math.exp(-2.0 * r))


def fidelity_mixture(p, r):
    """Weighted fidelity of the vacuum mixture: p*F(r) + (1-p)/2."""
    p = _require_prob("p", p)
    return p * fidelity_pure(r) + (1.0 - p) / 2.0


def fidelity_vs_I(p, insep):
    """Mixed and pure fidelities at equal inseparability value.

    pure = 1/(1 + insep), mixed = p^2/(insep + 2p - 1) + (1-p)/2; the gap
    simplifies to (1-p)(insep-1)^2 / (2(insep+1)(insep-1+2p)).  Regular at
    insep = 1 - p (infinite squeezing), so the boundary is accepted.
    """
    p, insep = _check_comparison_domain(p, insep, strict=False)
    denom = (insep - 1.0) + 2.0 * p
    pure = 1.0 / (1.0 + insep)
    mixed = p * p / denom + (1.0 - p) / 2.0
    gap = (1.0 - p) * (insep - 1.0) ** 2 / (2.0 * (insep + 1.0) * denom)
    return ComparisonPoint(p=p, insep=insep, mixed=mixed, pure=pure, gap=gap)


def _fidelity_gap_grid(p_window, q_window, steps):
    # q in [0, 1] rescales insep over [1-p, 1]; the gap in (p, q) is
    # p(1-p)(1-q)^2 / (2(2-p+pq)(1+q)), regular on the whole square
    p = np.linspace(p_window[0], p_window[1], steps)[:, None]
    q = np.linspace(q_window[0], q_window[1], steps)[None, :]
    gap = p * (1.0 - p) * (1.0 - q) ** 2 / (2.0 * (2.0 - p + p * q) * (1.0 + q))
    i, j = np.unravel_index(int(np.argmax(gap)), gap.shape)
    return float(p[i, 0]), float(q[0, j]), float(gap[i, j])


def max_fidelity_gap(grid_check=True):
    """Largest fidelity advantage over all feasible (p, insep) points.

    Returns ``(gap, p, insep)`` at the analytic maximum, gap =
    (3 - 2*sqrt(2))/2 at p = 2 - sqrt(2), insep = sqrt(2) - 1 (the
    infinite-squeezing boundary).  With ``grid_check`` a refining grid
    search over the feasible region must reproduce the maximum to 1e-5 in
    location and value, else InternalConsistencyError is raised.
    """
    gap_star = (3.0 - 2.0 * math.sqrt(2.0)) / 2.0
    p_star = 2.0 - math.sqrt(2.0)
    insep_star = math.sqrt(2.0) - 1.0
    if grid_check:
        p_window, q_window = (1e-6, 1.0), (0.0, 1.0)
        steps = 201
        for _ in range(4):
            best_p, best_q, best_gap = _fidelity_gap_grid(p_window, q_window, steps)
            half_p = 2.0 * (p_window[1] - p_window[0]) / (steps - 1)
            half_q = 2.0 * (q_window[1] - q_window[0]) / (steps - 1)
            p_window = (max(best_p - half_p, 1e-6), min(best_p + half_p, 1.0))
            q_window = (max(best_q - half_q, 0.0), min(best_q + half_q, 1.0))
        best_insep = 1.0 - best_p + best_p * best_q
        if (best_gap > gap_star + 1e-12
                or abs(best_gap - gap_star) > 1e-8
                or abs(best_p - p_star) > 1e-5
                or abs(best_insep - insep_star) > 1e-5):
            raise InternalConsistencyError(
                "grid refinement disagrees with the analytic fidelity-gap "
                f"maximum: found {best_gap} at (p={best_p}, insep={best_insep})")
    return gap_star, p_star, insep_star


def lossy_negativity(r, eta):
    """Negativity after symmetric beamsplitter loss of transmission eta.

    Equal to (1/x - 1)/2 with x = 1 + eta*(exp(-2r) - 1), i.e. the pure
    Gaussian negativity at the same inseparability value x.
    """
    r = _require_squeeze("r", r)
    eta = _require_prob("eta", eta)
    x = 1.0 + eta * math.expm1(-2.0 * r)
    return (1.0 / x - 1.0) / 2.0
