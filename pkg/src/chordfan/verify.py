"""
Seeded verification suite and its JSON report.

Each trial draws (P, n, phase, theta) and records eight checks. Failures are
recorded, never raised, so a report always shows the whole failure surface.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass

import numpy as np

from . import fan as F
from . import sweep as S
from .geom import Circle, Vec2

P_CAP = 0.95
STRESS_RADIUS = 0.999
STRESS_TOL = 1e-7

TOLERANCES = {
    "sum_squares": 1e-10,
    "sweep_rate": 1e-10,
    "area_quadrature": 1e-8,
    "midpoint_identity": 1e-12,
    "diameter_pairing": 1e-12,
    "expansion_identity": 1e-10,
    "cos_sum": 1e-12,  # scaled by n
    "sweep_additivity": 5e-9,
}
CHECK_NAMES = tuple(TOLERANCES)

# residual recorded when a check raises; finite so the report stays valid JSON
FAILED_RESIDUAL = 1.7976931348623157e308


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float
    tolerance: float
    config: dict


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    seed: int
    trials: int
    generator_name: str = S.RNG_NAME
    wall_time_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class Trial:
    px: float
    py: float
    n: int
    phase: float
    theta: float
    split: float  # fraction of theta given to the first additivity leg

    def config(self, phase: float | None = None) -> dict:
        return {
            "px": self.px,
            "py": self.py,
            "n": self.n,
            "phase": self.phase if phase is None else phase,
            "theta": self.theta,
        }


def draw_trials(trials: int, seed: int, n_min: int, n_max: int) -> list[Trial]:
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for _ in range(trials):
        r = P_CAP * math.sqrt(rng.random())
        ang = 2.0 * math.pi * rng.random()
        n = int(rng.integers(n_min, n_max + 1))
        phase = math.pi * rng.random()
        theta = (math.pi / n) * rng.random()
        split = rng.random()
        out.append(Trial(r * math.cos(ang), r * math.sin(ang), n, phase, theta, split))
    return out


def _check(name: str, config: dict, compute, tolerance: float | None = None) -> CheckResult:
    tol = TOLERANCES[name] if tolerance is None else tolerance
    try:
        residual = float(compute())
    except Exception:  # recorded, not raised
        residual = FAILED_RESIDUAL
    if not math.isfinite(residual):
        residual = FAILED_RESIDUAL
    return CheckResult(name, residual <= tol, residual, tol, config)


def trial_checks(trial: Trial, circle: Circle = Circle()) -> list[CheckResult]:
    p = Vec2(trial.px, trial.py)
    fan = F.ChordFan(circle, p, trial.n, trial.phase)
    region = S.SweptRegion(fan, trial.theta)
    anchored = F.diameter_fan(circle, p, trial.n)
    cfg = trial.config()
    acfg = trial.config(anchored.phase)
    n = trial.n
    theta1 = trial.theta * trial.split
    theta2 = trial.theta - theta1
    return [
        _check("sum_squares", cfg,
               lambda: abs(F.sum_squared_distances(fan) - F.sum_squared_closed_form(fan))),
        _check("sweep_rate", cfg,
               lambda: abs(S.sweep_rate(fan) - 0.5 * F.sum_squared_closed_form(fan))),
        _check("area_quadrature", cfg,
               lambda: abs(S.area_quadrature(region, 1e-9).value - S.swept_area_exact(region))),
        _check("midpoint_identity", acfg, lambda: F.midpoint_identity_residual(anchored)),
        _check("diameter_pairing", acfg, lambda: F.diameter_pairing_residual(anchored)),
        _check("expansion_identity", acfg, lambda: F.expansion_identity_residual(anchored)),
        _check("cos_sum", cfg,
               lambda: abs(F.roots_of_unity_cos_sum(n) - (1.0 if n == 1 else 0.0)),
               TOLERANCES["cos_sum"] * n),
        _check("sweep_additivity", cfg,
               lambda: S.sweep_additivity_residual(fan, theta1, theta2, 1e-9)),
    ]


def stress_check(seed: int, circle: Circle = Circle()) -> CheckResult:
    """Quadrature against the exact law with P almost on the circle."""
    rng = np.random.Generator(np.random.PCG64(seed))
    ang = 2.0 * math.pi * rng.random()
    n = int(rng.integers(2, 13))
    phase = math.pi * rng.random()
    theta = (math.pi / n) * rng.random()
    p = Vec2.polar(STRESS_RADIUS, ang)
    cfg = {"px": p.x, "py": p.y, "n": n, "phase": phase, "theta": theta}

    def compute():
        region = S.SweptRegion(F.ChordFan(circle, p, n, phase), theta)
        return abs(S.area_quadrature(region, 1e-9).value - S.swept_area_exact(region))

    return _check("area_quadrature_boundary_stress", cfg, compute, STRESS_TOL)


def run_suite(trials: int, seed: int, n_range: tuple[int, int] = (2, 12),
              stress: bool = False) -> VerificationReport:
    n_min, n_max = n_range
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not (1 <= n_min <= n_max <= 64):
        raise ValueError(f"n_range must lie within [1, 64], got {n_range}")
    start = time.perf_counter()
    checks: list[CheckResult] = []
    for trial in draw_trials(trials, seed, n_min, n_max):
        checks.extend(trial_checks(trial))
    if stress:
        checks.append(stress_check(seed))
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(checks, seed, trials, S.RNG_NAME, elapsed)


# JSON ------------------------------------------------------------------------

REPORT_SCHEMA = {
    "type": "object",
    "required": ["seed", "trials", "generator", "checks"],
    "properties": {
        "seed": {"type": "integer"},
        "trials": {"type": "integer", "minimum": 1},
        "generator": {"type": "string"},
        "wall_time_ms": {"type": "integer", "minimum": 0},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "residual", "tolerance", "config"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "residual": {"type": "number", "minimum": 0},
                    "tolerance": {"type": "number", "exclusiveMinimum": 0},
                    "config": {
                        "type": "object",
                        "required": ["px", "py", "n", "phase", "theta"],
                        "additionalProperties": False,
                        "properties": {
                            "px": {"type": "number"},
                            "py": {"type": "number"},
                            "n": {"type": "integer"},
                            "phase": {"type": "number"},
                            "theta": {"type": "number"},
                        },
                    },
                },
            },
        },
    },
}


def fmt_float(x: float) -> str:
    s = "%.17g" % x
    if not any(ch in s for ch in ".eEn"):
        s += ".0"
    return s


def _config_json(cfg: dict) -> str:
    return (
        f'{{"px": {fmt_float(cfg["px"])}, "py": {fmt_float(cfg["py"])}, '
        f'"n": {int(cfg["n"])}, "phase": {fmt_float(cfg["phase"])}, '
        f'"theta": {fmt_float(cfg["theta"])}}}'
    )


def report_to_json(report: VerificationReport) -> str:
    """Serialise with fixed key order and 17 significant digits per float."""
    lines = [
        "{",
        f'  "seed": {int(report.seed)},',
        f'  "trials": {int(report.trials)},',
        f'  "generator": {json.dumps(report.generator_name)},',
        '  "checks": [',
    ]
    items = []
    for c in report.checks:
        items.append(
            f'    {{"name": {json.dumps(c.name)}, "passed": {"true" if c.passed else "false"}, '
            f'"residual": {fmt_float(c.residual)}, "tolerance": {fmt_float(c.tolerance)}, '
            f'"config": {_config_json(c.config)}}}'
        )
    lines.append(",\n".join(items))
    lines.append("  ],")
    lines.append(f'  "wall_time_ms": {int(report.wall_time_ms)}')
    lines.append("}")
    return "\n".join(lines) + "\n"
