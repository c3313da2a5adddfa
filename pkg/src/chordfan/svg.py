"""
Standalone SVG figure of a swept chord fan.

Coordinates are normalised to the unit circle and y is negated, so the
viewBox ``-1.1 -1.1 2.2 2.2`` shows counterclockwise as counterclockwise.
Numbers are written with fixed precision, which makes output byte-stable.
"""

from __future__ import annotations

import math

from .fan import ChordFan
from .geom import Vec2, chord_roots
from .sweep import SweptRegion, sector_arcs

VIEWBOX = "-1.1 -1.1 2.2 2.2"
FILL = "#9bb7d4"


def _num(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Frame:
    def __init__(self, fan: ChordFan):
        self.c = fan.circle.center
        self.r = fan.circle.radius

    def xy(self, v: Vec2 | tuple[float, float]) -> str:
        x, y = (v.x, v.y) if isinstance(v, Vec2) else v
        return f"{_num((x - self.c.x) / self.r)} {_num(-(y - self.c.y) / self.r)}"

    def pt(self, v: Vec2) -> tuple[str, str]:
        return tuple(self.xy(v).split())


def _chord_lines(fan: ChordFan, frame: _Frame, rotation: float, cls: str) -> list[str]:
    out = []
    angles = [fan.direction_angle(k) + rotation for k in range(1, fan.n + 1)]
    t_minus, t_plus = chord_roots(fan.circle, fan.p, angles)
    p = fan.p
    for ang, tm, tp in zip(angles, t_minus, t_plus):
        a = (p.x + tm * math.cos(ang), p.y + tm * math.sin(ang))
        b = (p.x + tp * math.cos(ang), p.y + tp * math.sin(ang))
        (x1, y1), (x2, y2) = frame.xy(a).split(), frame.xy(b).split()
        out.append(f'  <line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    return out


def sector_paths(region: SweptRegion) -> list[str]:
    """Path data for each swept sector with non-zero arc span."""
    fan = region.fan
    frame = _Frame(fan)
    circle = fan.circle
    paths = []
    if region.theta == 0:
        return paths
    for start, b0, span in sector_arcs(region):
        if span == 0.0:
            continue
        b1 = b0 + span
        end = (circle.center.x + circle.radius * math.cos(b1),
               circle.center.y + circle.radius * math.sin(b1))
        large = 1 if span > math.pi else 0
        # sweep-flag 0: counterclockwise once y is flipped
        paths.append(
            f"M {frame.xy(fan.p)} L {frame.xy(start)} "
            f"A 1 1 0 {large} 0 {frame.xy(end)} Z"
        )
    return paths


def render_svg(region: SweptRegion, labels: bool = False) -> str:
    fan = region.fan
    frame = _Frame(fan)
    px, py = frame.pt(fan.p)
    cx, cy = frame.pt(fan.circle.center)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="440" height="440" viewBox="{VIEWBOX}">',
        '  <style>.chord-start{stroke:#222;stroke-width:0.008}'
        '.chord-end{stroke:#222;stroke-width:0.008;stroke-dasharray:0.03 0.02}'
        f'.sector{{fill:{FILL};stroke:none}}'
        '.label{font-family:serif;font-size:0.09px}</style>',
    ]
    for d in sector_paths(region):
        lines.append(f'  <path class="sector" d="{d}"/>')
    lines.append('  <circle class="boundary" cx="0.000000" cy="0.000000" r="1.000000" '
                 'fill="none" stroke="#000" stroke-width="0.01"/>')
    lines += _chord_lines(fan, frame, 0.0, "chord-start")
    if region.theta > 0:
        lines += _chord_lines(fan, frame, region.theta, "chord-end")
    lines.append(f'  <circle class="marker" cx="{cx}" cy="{cy}" r="0.018" fill="#000"/>')
    lines.append(f'  <circle class="marker" cx="{px}" cy="{py}" r="0.018" fill="#c00"/>')
    if labels:
        lines.append(f'  <text class="label" x="{cx}" y="{cy}" dx="0.03" dy="0.08">C</text>')
        lines.append(f'  <text class="label" x="{px}" y="{py}" dx="0.03" dy="-0.04">P</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
