"""Exception types raised across the package."""


class SuperluminalError(ValueError):
    """A velocity parameter is not strictly below the speed of light."""


class LorentzValidationError(ValueError):
    """A matrix failed a Lorentz-group or rotation check."""


class TransversalityError(ValueError):
    """A Pauli-Lubanski vector is not Minkowski-orthogonal to its momentum."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"W is not transverse to p: W.p = {residual:.3e}")


class NumericConsistencyError(RuntimeError):
    """An internal numerical cross-check exceeded its tolerance."""
