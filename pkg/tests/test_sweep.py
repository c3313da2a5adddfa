import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from chordfan import (
    ChordFan,
    Circle,
    Method,
    SweptRegion,
    ThetaOutOfRange,
    ToleranceNotMet,
    Vec2,
    area_monte_carlo,
    area_polygon,
    area_quadrature,
    contains,
    sweep_additivity_residual,
    sweep_rate,
    swept_area_exact,
    swept_measure_multiplicity,
)
from chordfan.sweep import adaptive_simpson, contains_many, quadrature_measure
from chordfan.geom import unit

from oracles import UNIT, bisection_roots, chord_counts, interior_points, phases


def region(p, n, theta, phase=0.0, circle=UNIT):
    return SweptRegion(ChordFan(circle, Vec2(*p), n, phase), theta)


def oracle_area(fan, theta):
    """scipy quad over half the squared ray lengths, rays found by bisection."""
    def rate(phi):
        s = 0.0
        for k in range(fan.n):
            tm, tp = bisection_roots(fan.circle, fan.p, unit(phi + k * math.pi / fan.n))
            s += tm * tm + tp * tp
        return 0.5 * s

    val, _ = integrate.quad(rate, fan.phase, fan.phase + theta, epsabs=1e-12, epsrel=1e-12)
    return val


# exact law ---------------------------------------------------------------------

def test_exact_examples():
    assert swept_area_exact(region((0.5, 0), 2, 0.3)) == pytest.approx(0.6, abs=1e-15)
    for n in (1, 2, 7):
        assert swept_area_exact(region((0.1, 0.2), n, 0.0)) == 0.0
    assert swept_area_exact(region((0.4, -0.1), 5, math.pi / 5)) == pytest.approx(math.pi, abs=1e-15)


def test_theta_out_of_range():
    with pytest.raises(ThetaOutOfRange):
        region((0, 0), 2, math.pi / 2 + 1e-6)
    with pytest.raises(ThetaOutOfRange):
        region((0, 0), 2, -0.1)
    region((0, 0), 3, math.pi / 3)


def test_multiplicity_examples():
    fan = ChordFan(UNIT, Vec2(0.5, 0), 2, 0.0)
    assert swept_measure_multiplicity(fan, math.pi) == pytest.approx(2 * math.pi, abs=1e-15)
    assert quadrature_measure(fan, math.pi, 1e-10) == pytest.approx(2 * math.pi, abs=1e-9)
    assert swept_measure_multiplicity(fan, 0.0) == 0.0
    fan3 = ChordFan(UNIT, Vec2(0.5, 0), 3, 0.0)
    assert swept_measure_multiplicity(fan3, 0.1) == pytest.approx(0.3, abs=1e-15)
    assert swept_measure_multiplicity(fan3, 0.1) == swept_area_exact(SweptRegion(fan3, 0.1))


def test_single_chord_exact_matches_oracle():
    fan = ChordFan(UNIT, Vec2(0.3, -0.6), 1, 0.2)
    for theta in (0.2, 0.7, 2.0, math.pi):
        assert swept_area_exact(SweptRegion(fan, theta)) == pytest.approx(oracle_area(fan, theta), abs=1e-10)
    # half-turn of a single chord covers the disk once
    assert swept_area_exact(SweptRegion(fan, math.pi)) == pytest.approx(math.pi, abs=1e-14)


def test_scaled_circle():
    big = Circle(Vec2(1.0, -2.0), 3.0)
    r = SweptRegion(ChordFan(big, Vec2(2.0, -1.0), 3, 0.4), 0.5)
    assert swept_area_exact(r) == pytest.approx(3 * 0.5 * 9, abs=1e-13)
    assert area_quadrature(r, 1e-10).value == pytest.approx(13.5, abs=1e-9)


# sweep rate --------------------------------------------------------------------

def test_rate_examples():
    assert sweep_rate(ChordFan(UNIT, Vec2(0.5, 0), 2, 0.0)) == pytest.approx(2.0, abs=1e-12)
    assert sweep_rate(ChordFan(UNIT, Vec2(0, 0), 6, 0.3)) == pytest.approx(6.0, abs=1e-13)
    for phase in (0.0, 0.5, 2.0):
        assert abs(sweep_rate(ChordFan(UNIT, Vec2(0.7, -0.1), 4, phase)) - 4) <= 1e-10


def test_single_chord_rate_varies_with_phase():
    rates = [sweep_rate(ChordFan(UNIT, Vec2(0.5, 0), 1, ph)) for ph in (0.0, math.pi / 2)]
    assert rates == pytest.approx([1.25, 0.75], abs=1e-14)


# membership --------------------------------------------------------------------

def test_contains_examples():
    assert contains(region((0, 0), 2, 0.5), Vec2(0.5 * math.cos(0.25), 0.5 * math.sin(0.25)))
    assert not contains(region((0, 0), 2, 0.5), Vec2(2, 0))
    x = Vec2(0.5 + 0.4 * math.cos(0.15), 0.4 * math.sin(0.15))
    assert x.norm() < 1
    assert contains(region((0.5, 0), 2, 0.3), x)
    # opposite ray of chord 1 is also swept
    assert contains(region((0.5, 0), 2, 0.3), Vec2(0.5 - 0.4 * math.cos(0.15), -0.4 * math.sin(0.15)))
    assert not contains(region((0.5, 0), 2, 0.3), Vec2(0.5 + 0.4 * math.cos(0.5), 0.4 * math.sin(0.5)))


def test_contains_apex():
    assert contains(region((0.3, 0.1), 3, 0.2, phase=0.4), Vec2(0.3, 0.1))
    assert not contains(region((0.3, 0.1), 3, 0.0, phase=0.4), Vec2(0.3, 0.1))


def test_tiling_membership():
    rng = np.random.default_rng(11)
    xs = rng.uniform(-1, 1, 200_000)
    ys = rng.uniform(-1, 1, 200_000)
    keep = xs**2 + ys**2 < 1
    xs, ys = xs[keep][:100_000], ys[keep][:100_000]
    for n, p, ph in [(1, (0.2, 0.3), 0.1), (2, (0.5, 0), 0.0), (5, (-0.4, 0.6), 2.0)]:
        r = region(p, n, math.pi / n, phase=ph)
        assert contains_many(r, xs, ys).all()


def _band_margin(r, xs, ys):
    f = r.fan
    band = np.mod(np.arctan2(ys - f.p.y, xs - f.p.x) - f.phase, f.spacing)
    return np.minimum(np.abs(band - r.theta), np.minimum(band, f.spacing - band))


@given(interior_points(), chord_counts, phases, st.floats(0, 1), st.floats(0, 1))
@settings(max_examples=50)
def test_monotone_in_theta(p, n, phase, a, b):
    t1, t2 = sorted((a * math.pi / n, b * math.pi / n))
    rng = np.random.default_rng(0)
    xs, ys = rng.uniform(-1, 1, (2, 5000))
    inner = contains_many(SweptRegion(ChordFan(UNIT, p, n, phase), t1), xs, ys)
    outer = contains_many(SweptRegion(ChordFan(UNIT, p, n, phase), t2), xs, ys)
    assert not (inner & ~outer).any()


@given(interior_points(), chord_counts, phases, st.floats(0, 1), st.floats(0, 2 * math.pi))
@settings(max_examples=50)
def test_rotation_equivariance(p, n, phase, frac, rot):
    theta = frac * math.pi / n
    rng = np.random.default_rng(1)
    xs, ys = rng.uniform(-1, 1, (2, 2000))
    before = SweptRegion(ChordFan(UNIT, p, n, phase), theta)
    after = SweptRegion(ChordFan(UNIT, p.rotated(rot), n, phase + rot), theta)
    c, s = math.cos(rot), math.sin(rot)
    rx, ry = c * xs - s * ys, s * xs + c * ys
    # skip points within rounding of an angular edge or the boundary circle
    ok = (_band_margin(before, xs, ys) > 1e-9) & (np.abs(xs**2 + ys**2 - 1) > 1e-9)
    assert (contains_many(before, xs, ys)[ok] == contains_many(after, rx, ry)[ok]).all()


# quadrature --------------------------------------------------------------------

def test_adaptive_simpson_generic():
    assert adaptive_simpson(math.sin, 0.0, math.pi, 1e-12) == pytest.approx(2.0, abs=1e-11)
    assert adaptive_simpson(math.exp, 0.0, 1.0, 1e-12) == pytest.approx(math.e - 1, abs=1e-11)
    with pytest.raises(ToleranceNotMet):
        adaptive_simpson(lambda x: math.sin(1 / x) if x else 0.0, 0.0, 1.0, 1e-14, max_intervals=64)


def test_quadrature_examples():
    est = area_quadrature(region((0.5, 0), 2, 0.3), 1e-10)
    assert est.method is Method.QUADRATURE and est.std_error == 0 and est.samples == 0
    assert est.value == pytest.approx(0.6, abs=1e-10)
    assert area_quadrature(region((0.5, 0), 2, 0.0), 1e-10).value == 0.0
    fan = ChordFan(UNIT, Vec2(0.2, 0.6), 3, 0.0)
    assert area_quadrature(SweptRegion(fan, 0.4), 1e-9).value == pytest.approx(1.2, abs=1e-9)
    assert oracle_area(fan, 0.4) == pytest.approx(1.2, abs=1e-10)


def test_quadrature_matches_oracle_for_single_chord():
    fan = ChordFan(UNIT, Vec2(-0.7, 0.2), 1, 1.0)
    got = area_quadrature(SweptRegion(fan, 1.7), 1e-11).value
    assert got == pytest.approx(oracle_area(fan, 1.7), abs=1e-10)


def test_p_independence():
    rng = np.random.default_rng(5)
    n, theta, phase = 3, 0.7, 0.25
    vals = []
    for _ in range(100):
        r = 0.95 * math.sqrt(rng.random())
        a = 2 * math.pi * rng.random()
        vals.append(area_quadrature(SweptRegion(ChordFan(UNIT, Vec2.polar(r, a), n, phase), theta)).value)
    vals = np.array(vals)
    assert np.max(np.abs(vals - n * theta)) <= 1e-8
    assert np.var(vals) <= 1e-16


def test_rate_matches_finite_difference():
    h = 1e-5
    for p, n, phase, theta in [((0.5, 0), 2, 0.0, 0.4), ((-0.3, 0.8), 5, 1.0, 0.3),
                               ((0.1, -0.9), 9, 2.0, 0.1)]:
        fan = ChordFan(UNIT, Vec2(*p), n, phase)
        up = area_quadrature(SweptRegion(fan, theta + h), 1e-12).value
        down = area_quadrature(SweptRegion(fan, theta - h), 1e-12).value
        assert (up - down) / (2 * h) == pytest.approx(sweep_rate(fan.rotated(theta)), abs=1e-4)


# Monte Carlo -------------------------------------------------------------------

def test_monte_carlo_example():
    est = area_monte_carlo(region((0.5, 0), 2, 0.3), 10**6, seed=3)
    assert est.method is Method.MONTE_CARLO and est.samples == 10**6
    assert est.std_error == pytest.approx(1.23e-3, rel=0.02)
    assert abs(est.value - 0.6) <= 3 * est.std_error


def test_monte_carlo_degenerate():
    zero = area_monte_carlo(region((0.5, 0), 2, 0.0), 1000, seed=1)
    assert (zero.value, zero.std_error) == (0.0, 0.0)
    full = area_monte_carlo(region((0.5, 0.2), 4, math.pi / 4), 10**5, seed=1)
    assert full.value == pytest.approx(math.pi, abs=1e-15)
    assert full.std_error == 0.0


def test_monte_carlo_deterministic():
    r = region((0.2, 0.1), 3, 0.5, phase=0.3)
    assert area_monte_carlo(r, 50_000, 9) == area_monte_carlo(r, 50_000, 9)
    assert area_monte_carlo(r, 50_000, 9) != area_monte_carlo(r, 50_000, 10)
    with pytest.raises(ValueError):
        area_monte_carlo(r, 0, 1)


# polygon -----------------------------------------------------------------------

def test_polygon_single_segment():
    est = area_polygon(region((0, 0), 2, 0.5), 1)
    assert est.method is Method.POLYGON
    assert est.value == pytest.approx(2 * math.sin(0.5), abs=1e-15)
    assert est.value < 1.0


def test_polygon_converges_quadratically():
    r = region((0.5, 0), 2, 0.3)
    errs = [0.6 - area_polygon(r, m).value for m in (16, 32, 64)]
    assert all(e > 0 for e in errs)
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.01)
    assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.01)
    assert abs(area_polygon(r, 1024).value - 0.6) <= 1e-5


def test_polygon_zero_theta():
    assert area_polygon(region((0.5, 0), 2, 0.0), 8).value == 0.0


@pytest.mark.parametrize("n", range(1, 9))
def test_polygon_tiles_disk(n):
    assert area_polygon(region((0.3, -0.5), n, math.pi / n, 0.7), 1024).value == pytest.approx(math.pi, abs=1e-4)


# additivity --------------------------------------------------------------------

def test_additivity_examples():
    f2 = ChordFan(UNIT, Vec2(0.5, 0), 2, 0.0)
    assert sweep_additivity_residual(f2, 0.0, 0.0) == 0.0
    assert sweep_additivity_residual(f2, 0.2, 0.1) <= 5e-9
    f4 = ChordFan(UNIT, Vec2(-0.4, 0.3), 4, 0.0)
    assert sweep_additivity_residual(f4, 0.3, math.pi / 4 - 0.3) <= 5e-9
    f1 = ChordFan(UNIT, Vec2(-0.4, 0.3), 1, 0.5)
    assert sweep_additivity_residual(f1, 1.0, 1.5) <= 5e-9
    with pytest.raises(ThetaOutOfRange):
        sweep_additivity_residual(f4, 0.5, 0.5)
