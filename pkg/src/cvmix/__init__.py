"""Entanglement, fidelity and key-rate toolkit for two-mode squeezed vacua,
their random vacuum mixtures, and lossy variants.

Three independent computation paths are provided for the negativity --
closed forms (:mod:`cvmix.measures`), covariance-matrix algebra
(:mod:`cvmix.gaussian_core`) and a truncated Fock-space eigensolve
(:mod:`cvmix.fock_oracle`) -- so every headline number can be
cross-checked.  :mod:`cvmix.qkd` analyses the thermal-camouflaged
beamsplitter attack, and :mod:`cvmix.cli` turns the sweeps into CSV.
"""

__version__ = "0.1.0"

from .errors import (
    EmptySearchError,
    InfeasibleCamouflageError,
    InfeasibleComparisonError,
    InternalConsistencyError,
    InvalidParameterError,
    NumericalFailureError,
    TruncationError,
)
from .measures import (
    ComparisonPoint,
    MixtureSpec,
    fidelity_mixture,
    fidelity_pure,
    fidelity_vs_I,
    inseparability_mixture,
    lossy_negativity,
    matched_squeeze,
    max_fidelity_gap,
    mixture_negativity,
    negativity_vs_I,
    pure_negativity,
)
from .gaussian_core import (
    CovarianceState,
    SymplecticSpectrum,
    apply_continuous_loss,
    duan_inseparability,
    gaussian_negativity_from_cm,
    mixture_covariance,
    pt_covariance,
    symplectic_eigenvalues,
    tmsv_covariance,
)
from .fock_oracle import (
    EigenSpectrum,
    FockDensityOp,
    auto_cutoff,
    hermitian_eigenvalues,
    mixture_density,
    negativity_numeric,
    partial_transpose_fock,
    tmsv_fock_density,
)
from .qkd import (
    QkdParams,
    RateBreakdown,
    SearchResult,
    advantage,
    advantage_search,
    camouflage_probability,
    default_search_grid,
    delta_I,
    delta_I_mix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
