"""Exception types shared across the package."""


class ChowstabError(Exception):
    """Base class for package-specific errors."""


class DimensionMismatchError(ChowstabError, ValueError):
    """Operands have incompatible dimensions."""


class DegenerateInputError(ChowstabError, ValueError):
    """Polytope input is empty, unbounded, or not full-dimensional."""


class NonDelzantError(ChowstabError, ValueError):
    """A Delzant polytope was required but the input is not Delzant."""


class AffineGenerationError(ChowstabError, ValueError):
    """Point configuration does not affinely generate the integer lattice."""


class InternalConsistencyError(ChowstabError, RuntimeError):
    """Two independent computation paths disagreed; this indicates a bug."""
