"""Roller-pin design optimization and the eta sweeps behind the design tables.

The objective is ``z = cos^2(delta_i) / alpha5^4`` with ``alpha5 = a5/p``,
minimized over (eta, a4) subject to five inequality constraints.  For a
fixed eta, z falls as a4 grows (alpha5 grows and the drive start moves
away from psi = pi), so the inner problem is solved in closed form by
taking the largest admissible roller; only eta is searched numerically.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DegeneratePin, Infeasible, InvalidParameters, SlideOCamError
from .geometry import DesignParams, extended_angle
from .kinematics import (ETA_CONVEX, STRICT_MARGIN, Mechanism, driving_interval, kappa_p_max,
                         pressure_angle_extremes, service_factor)
from .loads import BEARING_OFFSET, BEARING_SLOPE, PinModel, bearing_pin_radius, max_pin_deflection

ACTIVITY_TOL = 1e-6
# Slack for non-strict constraints evaluated in floating point.
_ROUND_TOL = 1e-12

GRID_POINTS = 200
GOLDEN_XTOL = 1e-10

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

TABLE1_ETAS = (0.69, 0.5, 0.4, 0.39, 0.38, 0.37, 0.36, 0.35, 0.34, 0.33, 1 / math.pi)
TABLE2_ETAS = TABLE1_ETAS[1:]


@dataclass(frozen=True)
class ConstraintStatus:
    """Signed constraint values; ``g3`` is None when eta < 1/pi (not applicable)."""

    g1: float
    g2: float
    g3: float | None
    g4: float
    g5: float
    active: frozenset = field(default_factory=frozenset)

    @property
    def feasible(self) -> bool:
        return (self.g1 <= _ROUND_TOL and self.g2 < 0 and self.g3 is not None and self.g3 < 0
                and self.g4 <= _ROUND_TOL and self.g5 < 0)

    def as_dict(self) -> dict:
        return {"g1": self.g1, "g2": self.g2, "g3": self.g3, "g4": self.g4, "g5": self.g5,
                "active": sorted(self.active), "feasible": self.feasible}


@dataclass(frozen=True)
class OptimizationResult:
    eta_opt: float
    a4_opt: float
    a5_opt: float
    z_opt: float
    constraints: ConstraintStatus
    iterations: int
    mechanism: Mechanism = Mechanism.COAXIAL


@dataclass(frozen=True)
class SweepRow:
    eta: float
    a4: float = math.nan
    a5: float = math.nan
    z: float = math.nan
    vLmax_um: float = math.nan
    mu_min_deg: float = math.nan
    mu_max_deg: float = math.nan
    service_pct: float = math.nan
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


def pin_ratio(params: DesignParams) -> float:
    """``alpha5 = (5/8) alpha4 - 25/(8p)``, i.e. a5/p from the bearing fit."""
    return (5 / 8) * params.a4 / params.p - 25 / (8 * params.p)


def cos2_delta_i(params: DesignParams, mechanism: Mechanism, delta: float | None = None) -> float:
    psi_i = driving_interval(params, mechanism, delta).psi_start
    c2 = params.c**2
    return c2 / (c2 + (psi_i - math.pi) ** 2)


def objective_z(params: DesignParams, mechanism: Mechanism = Mechanism.COAXIAL,
                delta: float | None = None) -> float:
    if params.a4 <= BEARING_OFFSET / 2:
        raise DegeneratePin(f"a4={params.a4} mm leaves no pin (needs a4 > 5 mm)")
    return cos2_delta_i(params, mechanism, delta) / pin_ratio(params) ** 4


def constraints(params: DesignParams) -> ConstraintStatus:
    p, eta = params.p, params.eta
    alpha4 = params.a4 / p
    g1 = 1 / math.pi - eta
    g2 = alpha4 - 0.5
    g3 = alpha4 - 1 / (p * kappa_p_max(params)) if eta >= ETA_CONVEX else None
    g4 = alpha4 - eta + params.b / p
    g5 = pin_ratio(params) - 0.25
    values = {"g1": g1, "g2": g2, "g3": g3, "g4": g4, "g5": g5}
    active = frozenset(k for k, g in values.items() if g is not None and abs(g) < ACTIVITY_TOL)
    return ConstraintStatus(g1, g2, g3, g4, g5, active)


def max_roller_radius(p: float, b: float, eta: float, margin: float = STRICT_MARGIN) -> float:
    """Largest a4 satisfying g2..g5 at this eta (g4 is non-strict, the others strict)."""
    bounds = [p / 2 - margin, eta * p - b, BEARING_SLOPE * p / 4 + BEARING_OFFSET / 2 - margin]
    if abs(2 * math.pi * eta - 1) > 1e-6:
        kmax = kappa_p_max(DesignParams(p=p, eta=eta, a4=1.0, b=b))
        bounds.append(1 / kmax - margin)
    return min(bounds)


def golden_section(f, a: float, b: float, xtol: float = GOLDEN_XTOL):
    """Minimize a unimodal ``f`` on ``[a, b]``.  Returns ``(x, f(x), iterations)``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    it = 0
    while b - a > xtol:
        it += 1
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x), it


def _design_at(p, b, eta):
    a4 = max_roller_radius(p, b, eta)
    if a4 <= BEARING_OFFSET / 2:
        return None
    params = DesignParams(p=p, eta=eta, a4=a4, b=b)
    if not constraints(params).feasible:
        return None
    return params


def _z_of_eta(p, b, eta, mechanism):
    try:
        params = _design_at(p, b, eta)
        if params is None:
            return math.inf
        return objective_z(params, mechanism)
    except SlideOCamError:
        return math.inf


def optimize(p: float = 50.0, b: float = 9.5, eta_bounds=(1 / math.pi, 1.0),
             mechanism: Mechanism = Mechanism.COAXIAL) -> OptimizationResult:
    """Minimize z over eta with a4 at its largest admissible value.

    A 200-point eta grid seeds a golden-section refinement on the two grid
    cells around the best grid point.  Deterministic.
    """
    mechanism = Mechanism(mechanism)
    lo, hi = map(float, eta_bounds)
    if p <= 0:
        raise InvalidParameters(f"pitch must be positive, got {p}")
    if lo > hi:
        raise InvalidParameters(f"empty eta bounds [{lo}, {hi}]")
    if lo < ETA_CONVEX - 1e-15:
        raise InvalidParameters(f"eta bounds must lie in [1/pi, inf), got lower bound {lo}")

    def z(eta):
        return _z_of_eta(p, b, eta, mechanism)

    grid = np.linspace(lo, hi, GRID_POINTS) if hi > lo else np.array([lo])
    zs = np.array([z(eta) for eta in grid])
    if not np.isfinite(zs).any():
        raise Infeasible(
            f"no eta in [{lo:.6g}, {hi:.6g}] admits a roller with a4 > 5 mm "
            f"satisfying every constraint (p={p}, b={b})")
    i = int(np.argmin(zs))
    eta_best, z_best, iterations = float(grid[i]), float(zs[i]), 0
    if grid.size > 1:
        a, c = float(grid[max(i - 1, 0)]), float(grid[min(i + 1, grid.size - 1)])
        x, fx, iterations = golden_section(z, a, c)
        if fx < z_best:
            eta_best, z_best = x, fx

    params = _design_at(p, b, eta_best)
    return OptimizationResult(
        eta_opt=eta_best,
        a4_opt=params.a4,
        a5_opt=bearing_pin_radius(params.a4),
        z_opt=z_best,
        constraints=constraints(params),
        iterations=iterations,
        mechanism=mechanism,
    )


def sweep_row(p: float, b: float, pin: PinModel, eta: float,
              mechanism: Mechanism = Mechanism.COAXIAL) -> SweepRow:
    """One design-table row: a4 as large as the constraints allow at ``eta``."""
    if eta < ETA_CONVEX:
        return SweepRow(eta=eta, error=f"infeasible: g1 > 0 (eta={eta:.6g} < 1/pi)")
    try:
        a4 = max_roller_radius(p, b, eta)
        a5 = bearing_pin_radius(a4)
        params = DesignParams(p=p, eta=eta, a4=a4, b=b)
        status = constraints(params)
        if not status.feasible:
            return SweepRow(eta=eta, a4=a4, a5=a5, error="infeasible: constraints violated")
        delta = extended_angle(params)
        mu_min, mu_max = pressure_angle_extremes(params, mechanism, delta)
        return SweepRow(
            eta=eta,
            a4=a4,
            a5=a5,
            z=objective_z(params, mechanism, delta),
            vLmax_um=1e3 * max_pin_deflection(pin.with_a5(a5), params, mechanism, delta),
            mu_min_deg=math.degrees(mu_min),
            mu_max_deg=math.degrees(mu_max),
            service_pct=100 * service_factor(params, mechanism, delta=delta),
        )
    except SlideOCamError as exc:
        return SweepRow(eta=eta, error=f"{type(exc).__name__}: {exc}")


def sweep(p: float, b: float, pin: PinModel, etas, mechanism: Mechanism = Mechanism.COAXIAL,
          workers: int = 1) -> list[SweepRow]:
    """Evaluate :func:`sweep_row` for each eta; output order follows ``etas``."""
    mechanism = Mechanism(mechanism)
    etas = [float(e) for e in etas]

    def row(eta):
        return sweep_row(p, b, pin, eta, mechanism)

    if workers <= 1:
        return [row(eta) for eta in etas]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(row, etas))
