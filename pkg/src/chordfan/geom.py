"""
2D vectors, circles and the line-circle intersection everything else is built on.

All values are immutable doubles. ``line_circle_roots`` is the scalar, validated
entry point; ``chord_roots`` is the same closed form broadcast over an array of
direction angles, used by the quadrature and rendering hot paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, NonUnitDirection, PointNotInterior

# |p - center| <= radius * (1 - INTERIOR_MARGIN) counts as strictly inside
INTERIOR_MARGIN = 1e-9
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite vector component: ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Vec2:
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec2:
        return Vec2(self.x / s, self.y / s)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def rotated(self, angle: float, about: Vec2 | None = None) -> Vec2:
        ox, oy = (about.x, about.y) if about is not None else (0.0, 0.0)
        c, s = math.cos(angle), math.sin(angle)
        dx, dy = self.x - ox, self.y - oy
        return Vec2(ox + c * dx - s * dy, oy + s * dx + c * dy)

    @classmethod
    def polar(cls, r: float, angle: float) -> Vec2:
        return cls(r * math.cos(angle), r * math.sin(angle))


ORIGIN = Vec2(0.0, 0.0)


def dot(a: Vec2, b: Vec2) -> float:
    return a.x * b.x + a.y * b.y


def cross(a: Vec2, b: Vec2) -> float:
    return a.x * b.y - a.y * b.x


def unit(angle: float) -> Vec2:
    return Vec2(math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class Circle:
    center: Vec2 = ORIGIN
    radius: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise GeometryError(f"radius must be positive and finite, got {self.radius}")

    def is_interior(self, p: Vec2) -> bool:
        return (p - self.center).norm() <= self.radius * (1.0 - INTERIOR_MARGIN)

    def require_interior(self, p: Vec2) -> None:
        if not self.is_interior(p):
            raise PointNotInterior(
                f"point ({p.x}, {p.y}) is not strictly inside circle of radius "
                f"{self.radius} at ({self.center.x}, {self.center.y})"
            )

    def area(self) -> float:
        return math.pi * self.radius**2


def _stable_roots(b: float, c: float) -> tuple[float, float]:
    # roots of t^2 + 2bt + c = 0 with c < 0, avoiding cancellation
    disc = math.sqrt(b * b - c)
    q = -(b + math.copysign(disc, b))
    r1, r2 = q, c / q
    return (r1, r2) if r1 < r2 else (r2, r1)


def line_circle_roots(circle: Circle, p: Vec2, direction: Vec2) -> tuple[float, float]:
    """Parameters t_minus < 0 < t_plus where p + t*direction meets the circle.

    ``direction`` must already be a unit vector; it is validated, never renormalized.
    """
    if abs(direction.norm() - 1.0) > UNIT_TOL:
        raise NonUnitDirection(f"|dir| = {direction.norm()!r}, expected 1")
    circle.require_interior(p)
    d = p - circle.center
    b = dot(d, direction)
    c = dot(d, d) - circle.radius**2
    return _stable_roots(b, c)


def chord_roots(circle: Circle, p: Vec2, angles) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``line_circle_roots`` over direction angles. No validation."""
    angles = np.asarray(angles, dtype=float)
    dx, dy = p.x - circle.center.x, p.y - circle.center.y
    b = dx * np.cos(angles) + dy * np.sin(angles)
    c = dx * dx + dy * dy - circle.radius**2
    disc = np.sqrt(b * b - c)
    q = -(b + np.copysign(disc, b))
    r1, r2 = q, c / q
    return np.minimum(r1, r2), np.maximum(r1, r2)
