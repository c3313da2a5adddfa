"""Chord fans in a circle: the generalised Archimedes sum and the swept-area law."""

from .errors import (
    GeometryError,
    NonUnitDirection,
    NotDiameterAnchored,
    PointNotInterior,
    ThetaOutOfRange,
    ToleranceNotMet,
)
from .fan import (
    Chord,
    ChordFan,
    chords,
    cos_squared_sum,
    diameter_fan,
    diameter_pairing_residual,
    expansion_identity_residual,
    midpoint_identity_residual,
    roots_of_unity_cos_sum,
    sum_squared_closed_form,
    sum_squared_distances,
)
from .geom import Circle, Vec2, dot, line_circle_roots
from .sweep import (
    AreaEstimate,
    Method,
    SweptRegion,
    area_monte_carlo,
    area_polygon,
    area_quadrature,
    contains,
    sweep_additivity_residual,
    sweep_rate,
    swept_area_exact,
    swept_measure_multiplicity,
)
from .verify import CheckResult, VerificationReport, run_suite

__version__ = "0.1.0"
