"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A parameter lies outside the documented domain."""


class InfeasibleComparisonError(InvalidParameterError):
    """No equal-inseparability comparison exists (requires insep > 1 - p)."""


class InfeasibleCamouflageError(InvalidParameterError):
    """Second moments cannot be matched by any mixture weight (needs N_p > N >= 1)."""


class TruncationError(InvalidParameterError):
    """Fock-space cutoff too small for the requested accuracy."""

    def __init__(self, message, required_cutoff=None):
        super().__init__(message)
        self.required_cutoff = required_cutoff


class EmptySearchError(InvalidParameterError):
    """A parameter search was requested over an empty feasible set."""


class NumericalFailureError(RuntimeError):
    """An iterative numerical routine failed to meet its contract."""


class InternalConsistencyError(RuntimeError):
    """Two redundant computation paths disagreed beyond tolerance."""
