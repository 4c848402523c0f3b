"""Exception hierarchy for equicoh."""


class EquicohError(Exception):
    """Base class for all equicoh errors."""


class NotHermitian(EquicohError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NoConvergence(EquicohError):
    """Iterative routine exhausted its sweep budget."""


class InvalidDistribution(EquicohError):
    """Probability vector fails normalization or positivity."""


class DimensionTooLarge(EquicohError):
    """Requested dimension exceeds the supported range."""


class MismatchedSize(EquicohError):
    """Operands have incompatible qubit counts."""


class DimensionMismatch(EquicohError):
    """Operands have incompatible Hilbert-space dimensions."""


class NotPure(EquicohError):
    """State is not pure within tolerance."""


class NotDensity(EquicohError):
    """Matrix is not a valid density operator."""


class NotOrthonormal(EquicohError):
    """Vector family is not orthonormal within tolerance."""


class ConstructionFailed(EquicohError):
    """A built design failed its defining structural check."""


class DegenerateCombination(EquicohError):
    """All seeded operator combinations had near-degenerate spectra."""


class GridTooCoarse(EquicohError):
    """Sphere scan did not resolve the expected solution clusters."""
