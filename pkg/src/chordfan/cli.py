"""
Command-line front end.

    chordfan verify --trials 1000 --seed 7 --n-min 2 --n-max 12
    chordfan area --px 0.5 --py 0 --n 2 --theta 0.3
    chordfan sweep --n 2 --theta 0.3
    chordfan render --px 0.35 --py 0.2 --n 2 --theta 0.4 -o cross.svg

Exit codes: 0 all checks pass, 1 checks failed or I/O error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from . import sweep as S
from .errors import GeometryError
from .fan import ChordFan
from .geom import Circle, Vec2
from .svg import render_svg
from .verify import fmt_float, report_to_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

POLYGON_TOL = 1e-4
MC_SIGMAS = 4.0
SWEEP_TOL = 1e-8


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    px: float = 0.0
    py: float = 0.0
    n: int = 2
    phase: float = 0.0
    theta: float = 0.0
    samples: int = 10**6
    seed: int = 0
    tol: float = 1e-9
    radius: float = 1.0
    output_path: str | None = None
    format: str = "json"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        scale = math.pi / 180.0 if getattr(args, "degrees", False) else 1.0
        return cls(
            command=args.command,
            px=args.px,
            py=args.py,
            n=args.n,
            phase=args.phase * scale,
            theta=args.theta * scale,
            samples=args.samples,
            seed=args.seed,
            tol=args.tol,
            radius=args.radius,
            output_path=args.output,
            format=args.format,
        )

    def fan(self) -> ChordFan:
        return ChordFan(Circle(Vec2(0.0, 0.0), self.radius), Vec2(self.px, self.py), self.n,
                        self.phase)


def _default_seed() -> int:
    raw = os.environ.get("CRUX_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"CRUX_SEED must be an integer, got {raw!r}")


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _positive_float(s: str) -> float:
    v = float(s)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--px", type=float, default=0.0)
    common.add_argument("--py", type=float, default=0.0)
    common.add_argument("--n", type=_positive_int, default=2, help="chord count")
    common.add_argument("--phase", type=float, default=0.0, help="angle of chord 1")
    common.add_argument("--theta", type=float, default=0.0, help="rotation angle")
    common.add_argument("--radius", type=_positive_float, default=1.0)
    common.add_argument("--samples", type=_positive_int, default=10**6)
    common.add_argument("--seed", type=int, default=_default_seed(),
                        help="defaults to $CRUX_SEED or 0")
    common.add_argument("--tol", type=_positive_float, default=1e-9,
                        help="quadrature tolerance")
    common.add_argument("--degrees", action="store_true", help="angles given in degrees")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="json for verify/area, csv for sweep by default")
    common.add_argument("-o", "--output", default=None)

    parser = argparse.ArgumentParser(prog="chordfan", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run the seeded verification suite")
    v.add_argument("--trials", type=_positive_int, default=100)
    v.add_argument("--n-min", type=int, default=2)
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--stress", action="store_true",
                   help="append a boundary-stress check with |P| = 0.999")

    a = sub.add_parser("area", parents=[common], help="exact area and its three oracles")
    a.add_argument("--multiplicity", action="store_true",
                   help="allow theta > pi/n; reports the measure with multiplicity")
    a.add_argument("--segments", type=_positive_int, default=1024,
                   help="polygon segments per arc")

    s = sub.add_parser("sweep", parents=[common], help="area over a polar grid of P")
    s.add_argument("--radii", type=_positive_int, default=8)
    s.add_argument("--angles", type=_positive_int, default=16)
    s.add_argument("--r-max", type=float, default=0.9)

    r = sub.add_parser("render", parents=[common], help="write an SVG figure")
    r.add_argument("--labels", action="store_true")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    if not (1 <= args.n_min <= args.n_max <= 64):
        raise UsageError("--n-min/--n-max must satisfy 1 <= n-min <= n-max <= 64")
    report = run_suite(args.trials, cfg.seed, (args.n_min, args.n_max), stress=args.stress)
    _emit(report_to_json(report), cfg.output_path)
    failed = sum(not c.passed for c in report.checks)
    print(f"{len(report.checks) - failed}/{len(report.checks)} checks passed "
          f"({report.wall_time_ms} ms)", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def _area_rows(cfg: RunConfig, args: argparse.Namespace) -> tuple[float, list[dict]]:
    fan = cfg.fan()
    if args.multiplicity:
        expected = fan.n * cfg.theta * cfg.radius**2
        exact = S.swept_measure_multiplicity(fan, cfg.theta)
        quad = S.quadrature_measure(fan, cfg.theta, cfg.tol)
        ests = [S.AreaEstimate(exact), S.AreaEstimate(quad, method=S.Method.QUADRATURE)]
    else:
        region = S.SweptRegion(fan, cfg.theta)
        expected = fan.n * region.theta * cfg.radius**2
        ests = [
            S.AreaEstimate(S.swept_area_exact(region)),
            S.area_quadrature(region, cfg.tol),
            S.area_monte_carlo(region, cfg.samples, cfg.seed),
            S.area_polygon(region, args.segments),
        ]
    # equals n*theta*R^2 except for a single chord, whose sweep depends on P and phase
    reference = ests[0].value
    rows = []
    for est in ests:
        if est.method is S.Method.EXACT:
            tol = 1e-12 * max(1.0, abs(reference))
        elif est.method is S.Method.QUADRATURE:
            tol = cfg.tol
        elif est.method is S.Method.POLYGON:
            tol = POLYGON_TOL * cfg.radius**2
        else:
            tol = max(MC_SIGMAS * est.std_error, 1e-15)
        residual = abs(est.value - reference)
        rows.append({
            "method": est.method.value,
            "value": est.value,
            "std_error": est.std_error,
            "samples": est.samples,
            "residual": residual,
            "tolerance": tol,
            "passed": residual <= tol,
        })
    return expected, rows


AREA_COLUMNS = ("method", "value", "std_error", "samples", "residual", "tolerance", "passed")


def cmd_area(cfg: RunConfig, args: argparse.Namespace) -> int:
    expected, rows = _area_rows(cfg, args)
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(AREA_COLUMNS)
        for row in rows:
            w.writerow([_cell(row[k]) for k in AREA_COLUMNS])
        text = buf.getvalue()
    else:
        doc = {
            "px": cfg.px, "py": cfg.py, "n": cfg.n, "phase": cfg.phase, "theta": cfg.theta,
            "radius": cfg.radius, "multiplicity": bool(args.multiplicity),
            "n_theta": expected, "generator": S.RNG_NAME, "seed": cfg.seed,
            "estimates": rows,
        }
        text = json.dumps(doc, indent=2) + "\n"
    _emit(text, cfg.output_path)
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_FAIL


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    return str(v)


SWEEP_COLUMNS = ("p_x", "p_y", "n", "theta", "area_quadrature", "abs_residual_vs_ntheta")


def polar_grid(radii: int, angles: int, r_max: float) -> list[tuple[float, float]]:
    pts = []
    for i in range(1, radii + 1):
        r = r_max * i / radii
        for j in range(angles):
            a = 2.0 * math.pi * j / angles
            pts.append((r * math.cos(a), r * math.sin(a)))
    return pts


def cmd_sweep(cfg: RunConfig, args: argparse.Namespace) -> int:
    if not (0 <= args.r_max < 1):
        raise UsageError("--r-max must lie in [0, 1)")
    circle = Circle(Vec2(0.0, 0.0), cfg.radius)
    rows = []
    for x, y in polar_grid(args.radii, args.angles, args.r_max):
        p = Vec2(x * cfg.radius, y * cfg.radius)
        region = S.SweptRegion(ChordFan(circle, p, cfg.n, cfg.phase), cfg.theta)
        area = S.area_quadrature(region, cfg.tol).value
        target = cfg.n * cfg.theta * cfg.radius**2
        rows.append((p.x, p.y, cfg.n, cfg.theta, area, abs(area - target)))
    if cfg.format == "json":
        text = json.dumps([dict(zip(SWEEP_COLUMNS, r)) for r in rows], indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SWEEP_COLUMNS)
        for r in rows:
            w.writerow([_cell(v) for v in r])
        text = buf.getvalue()
    _emit(text, cfg.output_path)
    worst = max(r[-1] for r in rows)
    return EXIT_OK if worst <= SWEEP_TOL or cfg.n == 1 else EXIT_FAIL


def cmd_render(cfg: RunConfig, args: argparse.Namespace) -> int:
    region = S.SweptRegion(cfg.fan(), cfg.theta)
    _emit(render_svg(region, labels=args.labels), cfg.output_path)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "area": cmd_area, "sweep": cmd_sweep, "render": cmd_render}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "sweep" else "json"
    cfg = RunConfig.from_args(args)
    try:
        return COMMANDS[args.command](cfg, args)
    except S.ThetaOutOfRange as exc:
        hint = " (pass --multiplicity to measure overlapping sweeps)" if args.command == "area" else ""
        print(f"chordfan: error: {exc}{hint}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, UsageError) as exc:
        print(f"chordfan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"chordfan: I/O error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
