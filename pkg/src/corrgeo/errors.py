"""Exception types shared across the corrgeo modules."""


class CorrGeoError(Exception):
    """Base class for all corrgeo errors."""


class AtomBoundExceeded(CorrGeoError, ValueError):
    """Event system has more atomic events than exhaustive enumeration allows."""


class DimensionBoundExceeded(CorrGeoError, ValueError):
    """Input exceeds the exact-enumeration size bounds."""


class DimensionMismatch(CorrGeoError, ValueError):
    """Operands have incompatible dimensions."""


class EmptyInput(CorrGeoError, ValueError):
    """An operation received an empty vertex or halfspace list."""


class EmptySlice(CorrGeoError, ValueError):
    """Affine slice does not intersect the polytope."""


class IndexOutOfRange(CorrGeoError, IndexError):
    """Coordinate index is invalid for the given polytope."""


class ValueNotInSet(CorrGeoError, ValueError):
    """Ticket assigns a value outside the balanced value set."""


class SpinBoundExceeded(CorrGeoError, ValueError):
    """Spin magnitude exceeds the supported bound."""


class MarginalNotUniform(CorrGeoError, ValueError):
    """Raffle marginal for some setting is not uniform over the value set."""

    def __init__(self, setting, marginal):
        self.setting = setting
        self.marginal = marginal
        super().__init__(
            f"marginal for setting {setting!r} is not uniform: {marginal}"
        )


class NotInElliptope(CorrGeoError, ValueError):
    """Correlation triple lies outside the quantum-admissible body."""


class NotNormalized(CorrGeoError, ValueError):
    """Direction vector is not normalized to unit length."""


class BadDistribution(CorrGeoError, ValueError):
    """Probability weights are negative or do not sum to one."""


class NotHermitian(CorrGeoError, ValueError):
    """Matrix expected to be Hermitian is not."""


class OverlappingRanges(CorrGeoError, ValueError):
    """Value ranges for a Boolean frame overlap or fail to cover the spectrum."""


class UnknownFigure(CorrGeoError, ValueError):
    """Requested figure dataset is not one of the known names."""
