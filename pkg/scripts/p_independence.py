"""Swept area over a polar grid of P for several chord counts.

    python scripts/p_independence.py --theta 0.3
"""

import argparse
import math

import numpy as np

from chordfan import ChordFan, Circle, SweptRegion, Vec2, area_quadrature
from chordfan.cli import polar_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--theta", type=float, default=0.3)
    ap.add_argument("--n-max", type=int, default=8)
    args = ap.parse_args()

    grid = polar_grid(8, 16, 0.9)
    print(f"{'n':>3} {'theta':>8} {'mean area':>18} {'n*theta':>18} {'max |resid|':>12} {'std over P':>12}")
    for n in range(1, args.n_max + 1):
        theta = min(args.theta, math.pi / n)
        vals = np.array([
            area_quadrature(SweptRegion(ChordFan(Circle(), Vec2(x, y), n, 0.0), theta), 1e-10).value
            for x, y in grid
        ])
        resid = np.max(np.abs(vals - n * theta))
        print(f"{n:>3} {theta:>8.4f} {vals.mean():>18.15f} {n * theta:>18.15f} {resid:>12.2e} {vals.std():>12.2e}")
    print("n = 1 is the only row that moves with P: a lone chord's sweep rate is not constant.")


if __name__ == "__main__":
    main()
