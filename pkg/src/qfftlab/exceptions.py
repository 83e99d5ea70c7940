"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix or vector dimensions are inconsistent with the operation."""


class SizeError(ValueError):
    """Problem size exceeds a configured cap."""


class StructureError(ValueError):
    """A circuit description is structurally malformed."""


class NormalizationError(ValueError):
    """Probability data violates its normalization contract."""
