"""Exception types raised by the geometry, fan and sweep layers."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class PointNotInterior(GeometryError):
    pass


class NonUnitDirection(GeometryError):
    pass


class NotDiameterAnchored(GeometryError):
    pass


class ThetaOutOfRange(GeometryError):
    pass


class ToleranceNotMet(RuntimeError):
    """Adaptive quadrature hit its subdivision cap before converging."""
