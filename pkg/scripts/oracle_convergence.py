"""Convergence of the polygon and Monte Carlo oracles towards n*theta.

    python scripts/oracle_convergence.py
"""

import math

from chordfan import ChordFan, Circle, SweptRegion, Vec2, area_monte_carlo, area_polygon

REGION = SweptRegion(ChordFan(Circle(), Vec2(0.5, 0.0), 2, 0.0), 0.3)
TARGET = 0.6


def main():
    print("polygon: segments per arc, error, error ratio")
    prev = None
    for k in range(0, 12):
        m = 2**k
        err = TARGET - area_polygon(REGION, m).value
        ratio = "" if prev is None else f"{prev / err:6.3f}"
        print(f"  {m:>5d}  {err: .3e}  {ratio}")
        prev = err

    print("monte carlo: samples, estimate, std error, |error| / std error")
    for e in range(3, 8):
        est = area_monte_carlo(REGION, 10**e, seed=0)
        z = abs(est.value - TARGET) / est.std_error if est.std_error else math.nan
        print(f"  1e{e}  {est.value:.6f}  {est.std_error:.2e}  {z:.2f}")


if __name__ == "__main__":
    main()
