"""
Area swept by a chord fan rotating counterclockwise about its common point.

The exact law is n*theta*R^2 for fans of two or more chords. Three oracles that
share nothing with that formula check it: adaptive Simpson over the sweep rate,
seeded Monte Carlo over the membership predicate, and a shoelace polygon built
from the 2n sectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import GeometryError, ThetaOutOfRange, ToleranceNotMet
from .fan import ChordFan, sum_squared_distances
from .geom import Vec2, chord_roots

MAX_INTERVALS = 2**20
RNG_NAME = "numpy.random.PCG64"
# slack for theta computed as pi/n in floating point
_THETA_SLACK = 1e-12


class Method(str, Enum):
    EXACT = "exact"
    QUADRATURE = "quadrature"
    MONTE_CARLO = "monte_carlo"
    POLYGON = "polygon"


@dataclass(frozen=True)
class AreaEstimate:
    value: float
    std_error: float = 0.0
    samples: int = 0
    method: Method = Method.EXACT


@dataclass(frozen=True)
class SweptRegion:
    fan: ChordFan
    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta) or self.theta < 0:
            raise ThetaOutOfRange(f"theta must be finite and >= 0, got {self.theta!r}")
        if self.theta > self.fan.spacing + _THETA_SLACK:
            raise ThetaOutOfRange(
                f"theta={self.theta!r} exceeds pi/n={self.fan.spacing!r}; "
                "use swept_measure_multiplicity for overlapping sweeps"
            )


def _single_chord_drift(fan: ChordFan, theta: float) -> float:
    # n = 1 only: integral of 2|d|^2 cos^2(psi - alpha) - |d|^2 over the sweep
    d = fan.p - fan.circle.center
    d2 = d.x * d.x + d.y * d.y
    if d2 == 0.0:
        return 0.0
    alpha = d.angle()
    return 0.5 * d2 * (math.sin(2 * (fan.phase + theta - alpha)) - math.sin(2 * (fan.phase - alpha)))


def _measure(fan: ChordFan, theta: float) -> float:
    base = fan.n * theta * fan.circle.radius**2
    if fan.n == 1:
        # a lone chord's sweep rate is not constant, so its area depends on P and phase
        base += _single_chord_drift(fan, theta)
    return base


def swept_area_exact(region: SweptRegion) -> float:
    return _measure(region.fan, region.theta)


def swept_measure_multiplicity(fan: ChordFan, theta: float) -> float:
    """Swept area counted with multiplicity; valid for any theta >= 0."""
    if not math.isfinite(theta) or theta < 0:
        raise GeometryError(f"theta must be finite and >= 0, got {theta!r}")
    return _measure(fan, theta)


def sweep_rate(fan: ChordFan) -> float:
    """dA/dtheta: half the sum of squared distances. Constant n*R^2 only for n >= 2."""
    return 0.5 * sum_squared_distances(fan)


def _rate_integrand(fan: ChordFan):
    circle, p = fan.circle, fan.p
    offsets = np.arange(fan.n) * fan.spacing

    def f(phi: float) -> float:
        t_minus, t_plus = chord_roots(circle, p, phi + offsets)
        return 0.5 * float(np.sum(t_minus * t_minus + t_plus * t_plus))

    return f


def adaptive_simpson(f, a: float, b: float, tol: float, min_depth: int = 3,
                     max_intervals: int = MAX_INTERVALS) -> float:
    """Adaptive Simpson with Richardson correction, iterative over an explicit stack."""
    if b == a:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    total = 0.0
    intervals = 1
    while stack:
        a, b, fa, fm, fb, whole, eps, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = f(0.5 * (a + m)), f(0.5 * (m + b))
        left = (m - a) / 6.0 * (fa + 4.0 * lm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * rm + fb)
        delta = left + right - whole
        if depth >= min_depth and abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
            continue
        intervals += 1
        if intervals > max_intervals:
            raise ToleranceNotMet(f"adaptive Simpson exceeded {max_intervals} intervals")
        stack.append((m, b, fm, rm, fb, right, 0.5 * eps, depth + 1))
        stack.append((a, m, fa, lm, fm, left, 0.5 * eps, depth + 1))
    return total


def quadrature_measure(fan: ChordFan, theta: float, tol: float = 1e-9) -> float:
    """Integral of the sweep rate over [phase, phase + theta], with no overlap clipping."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if theta == 0:
        return 0.0
    return adaptive_simpson(_rate_integrand(fan), fan.phase, fan.phase + theta, tol)


def area_quadrature(region: SweptRegion, tol: float = 1e-9) -> AreaEstimate:
    value = quadrature_measure(region.fan, region.theta, tol)
    return AreaEstimate(value, 0.0, 0, Method.QUADRATURE)


def contains_many(region: SweptRegion, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    fan = region.fan
    c, p = fan.circle.center, fan.p
    inside = (xs - c.x) ** 2 + (ys - c.y) ** 2 < fan.circle.radius**2
    if region.theta <= 0:
        return np.zeros_like(inside)
    band = np.mod(np.arctan2(ys - p.y, xs - p.x) - fan.phase, fan.spacing)
    at_p = (xs == p.x) & (ys == p.y)
    return inside & ((band <= region.theta) | at_p)


def contains(region: SweptRegion, x: Vec2) -> bool:
    return bool(contains_many(region, np.array([x.x]), np.array([x.y]))[0])


def area_monte_carlo(region: SweptRegion, samples: int = 10**6, seed: int = 0,
                     batch: int = 1 << 18) -> AreaEstimate:
    """Rejection-sample ``samples`` points uniformly in the disk and count hits.

    Proposals are drawn in fixed-size batches from PCG64(seed), so the result
    depends only on (seed, samples).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    circle = region.fan.circle
    disk_area = circle.area()
    if region.theta == 0:
        return AreaEstimate(0.0, 0.0, samples, Method.MONTE_CARLO)
    rng = np.random.Generator(np.random.PCG64(seed))
    cx, cy, r = circle.center.x, circle.center.y, circle.radius
    accepted = hits = 0
    while accepted < samples:
        u = rng.uniform(-1.0, 1.0, size=(2, batch))
        keep = u[0] ** 2 + u[1] ** 2 < 1.0
        xs, ys = cx + r * u[0][keep], cy + r * u[1][keep]
        take = min(samples - accepted, xs.size)
        xs, ys = xs[:take], ys[:take]
        hits += int(np.count_nonzero(contains_many(region, xs, ys)))
        accepted += take
    frac = hits / samples
    std = disk_area * math.sqrt(frac * (1.0 - frac) / samples)
    return AreaEstimate(disk_area * frac, std, samples, Method.MONTE_CARLO)


def sector_arcs(region: SweptRegion) -> list[tuple[Vec2, float, float]]:
    """The 2n swept sectors as (start point, start center-angle, ccw arc span).

    Each sector has apex P; its arc runs along the circle from where a ray from P
    hits it at the start of the sweep to where the same ray hits it at the end.
    """
    fan, theta = region.fan, region.theta
    circle, p = fan.circle, fan.p
    c = circle.center
    starts = fan.phase + np.arange(2 * fan.n) * fan.spacing
    ends = starts + theta
    _, t0 = chord_roots(circle, p, starts)
    _, t1 = chord_roots(circle, p, ends)
    out = []
    for psi0, psi1, s0, s1 in zip(starts, ends, t0, t1):
        sx, sy = p.x + s0 * math.cos(psi0), p.y + s0 * math.sin(psi0)
        ex, ey = p.x + s1 * math.cos(psi1), p.y + s1 * math.sin(psi1)
        b0 = math.atan2(sy - c.y, sx - c.x)
        span = (math.atan2(ey - c.y, ex - c.x) - b0) % (2 * math.pi)
        if span > 2 * math.pi - 1e-9:
            span = 0.0
        out.append((Vec2(sx, sy), b0, span))
    return out


def _shoelace(xs: np.ndarray, ys: np.ndarray) -> float:
    return 0.5 * float(np.dot(xs, np.roll(ys, -1)) - np.dot(ys, np.roll(xs, -1)))


def sector_polygon(region: SweptRegion, b0: float, span: float, segments: int):
    circle, p = region.fan.circle, region.fan.p
    betas = b0 + span * np.arange(segments + 1) / segments
    xs = np.concatenate([[p.x], circle.center.x + circle.radius * np.cos(betas)])
    ys = np.concatenate([[p.y], circle.center.y + circle.radius * np.sin(betas)])
    return xs, ys


def area_polygon(region: SweptRegion, segments_per_arc: int = 1024) -> AreaEstimate:
    if segments_per_arc < 1:
        raise ValueError("segments_per_arc must be >= 1")
    if region.theta == 0:
        return AreaEstimate(0.0, 0.0, 0, Method.POLYGON)
    total = 0.0
    for _, b0, span in sector_arcs(region):
        if span == 0.0:
            continue
        total += _shoelace(*sector_polygon(region, b0, span, segments_per_arc))
    return AreaEstimate(total, 0.0, 0, Method.POLYGON)


def sweep_additivity_residual(fan: ChordFan, theta1: float, theta2: float,
                              tol: float = 1e-9) -> float:
    if theta1 < 0 or theta2 < 0 or theta1 + theta2 > fan.spacing + _THETA_SLACK:
        raise ThetaOutOfRange("need theta1, theta2 >= 0 and theta1 + theta2 <= pi/n")
    whole = area_quadrature(SweptRegion(fan, theta1 + theta2), tol).value
    first = area_quadrature(SweptRegion(fan, theta1), tol).value
    second = area_quadrature(SweptRegion(fan.rotated(theta1), theta2), tol).value
    return abs(whole - first - second)
