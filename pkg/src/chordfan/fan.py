"""
Chord fans: n chords through an interior point P, spaced pi/n apart.

Besides building the chords, this module evaluates the vector identities that
carry the sum-of-squares argument (midpoint, diameter pairing, expansion) and
the generalised Archimedes sum itself, each as a residual or a raw value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import GeometryError, NotDiameterAnchored
from .geom import Circle, Vec2, cross, dot, line_circle_roots, unit

DIAMETER_ANGLE_TOL = 1e-9
CENTER_TOL = 1e-12


@dataclass(frozen=True)
class Chord:
    a: Vec2
    b: Vec2
    dist_a: float
    dist_b: float
    midpoint: Vec2


@dataclass(frozen=True)
class ChordFan:
    """``n`` chords through ``p``; chord k (1-based) points along phase + (k-1)*pi/n."""

    circle: Circle
    p: Vec2
    n: int
    phase: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise GeometryError(f"chord count must be a positive integer, got {self.n!r}")
        if not math.isfinite(self.phase):
            raise GeometryError("phase must be finite")
        object.__setattr__(self, "n", int(self.n))
        # chords are undirected, so phase lives in [0, pi)
        phase = math.fmod(self.phase, math.pi)
        if phase < 0:
            phase += math.pi
        if phase >= math.pi:
            phase = 0.0
        object.__setattr__(self, "phase", phase)
        self.circle.require_interior(self.p)

    @property
    def spacing(self) -> float:
        return math.pi / self.n

    def direction_angle(self, k: int) -> float:
        return self.phase + (k - 1) * self.spacing

    def rotated(self, dphi: float) -> ChordFan:
        return ChordFan(self.circle, self.p, self.n, self.phase + dphi)

    @cached_property
    def chords(self) -> tuple[Chord, ...]:
        return tuple(chords(self))


def _chord(circle: Circle, p: Vec2, angle: float) -> Chord:
    u = unit(angle)
    t_minus, t_plus = line_circle_roots(circle, p, u)
    a = p + u * t_minus
    b = p + u * t_plus
    return Chord(a=a, b=b, dist_a=(a - p).norm(), dist_b=(b - p).norm(), midpoint=(a + b) * 0.5)


def chords(fan: ChordFan) -> list[Chord]:
    """A_k on the negative side of the direction vector, B_k on the positive side."""
    return [_chord(fan.circle, fan.p, fan.direction_angle(k)) for k in range(1, fan.n + 1)]


def sum_squared_distances(fan: ChordFan) -> float:
    total = 0.0
    for ch in fan.chords:
        pa = ch.a - fan.p
        pb = ch.b - fan.p
        total += dot(pa, pa) + dot(pb, pb)
    return total


def sum_squared_closed_form(fan: ChordFan) -> float:
    """Closed form of the sum of squared distances.

    Per chord with unit direction u, PA^2 + PB^2 = 4<d,u>^2 - 2(|d|^2 - R^2) with
    d = P - center. For n >= 2 the squared cosines average to 1/2 and the sum
    collapses to 2nR^2. A single chord has nothing to average against, so the
    un-collapsed per-chord expression is returned instead.
    """
    r2 = fan.circle.radius**2
    if fan.n >= 2:
        return 2.0 * fan.n * r2
    d = fan.p - fan.circle.center
    b = dot(d, unit(fan.phase))
    return 4.0 * b * b - 2.0 * (dot(d, d) - r2)


def midpoint_identity_residual(fan: ChordFan) -> float:
    p = fan.p
    worst = 0.0
    for ch in fan.chords:
        r = (ch.a - p) + (ch.b - p) - (ch.midpoint - p) * 2.0
        worst = max(worst, r.norm())
    return worst


def is_diameter_anchored(fan: ChordFan) -> bool:
    d = fan.p - fan.circle.center
    dn = d.norm()
    if dn <= CENTER_TOL * fan.circle.radius:
        return True
    sin_angle = abs(cross(d, unit(fan.phase))) / dn
    return math.asin(min(1.0, sin_angle)) <= DIAMETER_ANGLE_TOL


def _require_anchored(fan: ChordFan) -> None:
    if not is_diameter_anchored(fan):
        raise NotDiameterAnchored(
            f"chord 1 (phase {fan.phase!r}) does not pass through the circle's center"
        )


def diameter_pairing_residual(fan: ChordFan) -> float:
    """max_k |PC_k + PC_{n-k} - 2 cos^2(k pi/n) PC_1| over k = 1..n.

    Chord indices in the pairing count angular steps away from the diameter
    (chord 1), taken mod n, so "chord j" here is ``fan.chords[j % n]``.
    """
    _require_anchored(fan)
    n, p = fan.n, fan.p
    pc = [ch.midpoint - p for ch in fan.chords]
    pc_diam = pc[0]
    worst = 0.0
    for k in range(1, n + 1):
        lhs = pc[k % n] + pc[(n - k) % n]
        r = lhs - pc_diam * (2.0 * math.cos(k * math.pi / n) ** 2)
        worst = max(worst, r.norm())
    return worst


def expansion_identity_residual(fan: ChordFan) -> float:
    """|sum(PA^2 + PB^2) - (2<PC_1, sum(PA + PB)> - 2n PC_1^2 + 2n R^2)|."""
    _require_anchored(fan)
    p, n = fan.p, fan.n
    pc1 = fan.chords[0].midpoint - p
    lhs = 0.0
    sx = sy = 0.0
    for ch in fan.chords:
        pa, pb = ch.a - p, ch.b - p
        lhs += dot(pa, pa) + dot(pb, pb)
        sx += pa.x + pb.x
        sy += pa.y + pb.y
    rhs = 2.0 * dot(pc1, Vec2(sx, sy)) - 2.0 * n * dot(pc1, pc1) + 2.0 * n * fan.circle.radius**2
    return abs(lhs - rhs)


def roots_of_unity_cos_sum(n: int) -> float:
    """sum_{k=1..n} cos(2 pi k / n); zero for n >= 2, one for n = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(math.cos(2.0 * math.pi * k / n) for k in range(1, n + 1))


def cos_squared_sum(n: int) -> float:
    """sum_{k=1..n} 2 cos^2(k pi / n); equals n for n >= 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(2.0 * math.cos(k * math.pi / n) ** 2 for k in range(1, n + 1))


def diameter_fan(circle: Circle, p: Vec2, n: int) -> ChordFan:
    circle.require_interior(p)
    d = p - circle.center
    if d.norm() <= CENTER_TOL * circle.radius:
        return ChordFan(circle, p, n, 0.0)
    return ChordFan(circle, p, n, d.angle())
