"""Write a small gallery of swept-fan figures into ./figures.

    python scripts/render_figures.py
"""

import math
from pathlib import Path

from chordfan import ChordFan, Circle, SweptRegion, Vec2
from chordfan.svg import render_svg

FIGURES = {
    "cross_n2.svg": (Vec2(0.35, 0.2), 2, 0.0, 0.4),
    "diameter_n3.svg": (Vec2(0.45, 0.0), 3, 0.0, 0.3),
    "fan_n5.svg": (Vec2(-0.3, 0.5), 5, 0.2, 0.25),
    "tiling_n4.svg": (Vec2(0.2, -0.4), 4, 0.1, math.pi / 4),
}


def main(out=Path("figures")):
    out.mkdir(exist_ok=True)
    for name, (p, n, phase, theta) in FIGURES.items():
        region = SweptRegion(ChordFan(Circle(), p, n, phase), theta)
        (out / name).write_text(render_svg(region, labels=True))
        print(out / name)


if __name__ == "__main__":
    main()
