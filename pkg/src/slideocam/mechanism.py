"""Multi-cam assemblies: the coaxial conjugate pair and the three-shaft layout.

Cam ``k`` is the same profile rotated by its phase; in the frame of cam 1 it
can drive the follower over ``[pi, 2*pi - Delta]`` shifted by that phase.
When two cams can drive, the one with the lower |mu| does.  Since |mu|
falls monotonically along a cam's drive arc, the cam that engaged first
keeps the follower until it loses contact at ``2*pi - Delta``, and the
next cam takes over exactly there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import SlideOCamError
from .geometry import TWO_PI, DesignParams, displacement_s, extended_angle
from .kinematics import (FeasibilityReport, Mechanism, driving_interval, feasibility,
                         pressure_angle, pressure_angle_extremes, service_factor)
from .loads import PinModel, max_pin_deflection
from .optimizer import objective_z


@dataclass(frozen=True)
class Layout:
    kind: Mechanism
    phases: tuple[float, ...]
    offsets_y: tuple[float, ...]


@dataclass(frozen=True)
class DriveSpan:
    """Half-open span ``[psi_start, psi_end)`` of shaft angle driven by ``cam``."""

    cam: int
    psi_start: float
    psi_end: float

    def contains(self, psi: float) -> bool:
        return self.psi_start <= psi < self.psi_end


@dataclass(frozen=True)
class DriveSchedule:
    kind: Mechanism
    spans: tuple[DriveSpan, ...]
    phases: tuple[float, ...]
    delta: float

    @property
    def start(self) -> float:
        return self.spans[0].psi_start

    def cam_at(self, psi: float) -> int:
        """Cam driving at shaft angle ``psi`` (any real value, wrapped per turn)."""
        t = self.start + (psi - self.start) % TWO_PI
        for span in self.spans:
            if span.contains(t):
                return span.cam
        return self.spans[-1].cam  # t == end of turn after rounding

    def local_angle(self, cam: int, psi: float) -> float:
        """Angle of ``cam``'s own profile at shaft angle ``psi``."""
        return psi - self.phases[cam - 1]


def layout(params: DesignParams, kind: Mechanism) -> Layout:
    """Cam phases and camshaft positions along the follower axis.

    Non-coaxial: shafts at ``y12 = 3p/2 + s(2pi/3)`` and ``y13 = 5p/2 + s(4pi/3)``,
    i.e. 4p/3 and 8p/3.
    """
    kind = Mechanism(kind)
    if kind is Mechanism.COAXIAL:
        return Layout(kind, (0.0, math.pi), (0.0, 0.0))
    p = params.p
    y12 = p / 2 + p + float(displacement_s(params, TWO_PI / 3))
    y13 = p / 2 + 2 * p + float(displacement_s(params, 2 * TWO_PI / 3))
    return Layout(kind, (0.0, TWO_PI / 3, 2 * TWO_PI / 3), (0.0, y12, y13))


def drive_schedule(params: DesignParams, kind: Mechanism,
                   delta: float | None = None) -> DriveSchedule:
    """Partition one shaft turn among the cams, starting with cam 1's engagement."""
    kind = Mechanism(kind)
    if delta is None:
        delta = extended_angle(params)
    phases = layout(params, kind).phases
    cam1 = driving_interval(params, kind, delta)
    step = kind.drive_length
    # shared boundaries, so a hand-over angle belongs to the incoming cam only
    bounds = [cam1.psi_start, cam1.psi_end]
    bounds += [cam1.psi_end + k * step for k in range(1, kind.n_cams - 1)]
    bounds.append(cam1.psi_start + TWO_PI)
    spans = tuple(DriveSpan(k + 1, bounds[k], bounds[k + 1]) for k in range(kind.n_cams))
    return DriveSchedule(kind, spans, phases, delta)


def capable_cams(schedule: DriveSchedule, psi: float) -> list[int]:
    """Cams whose contact arc ``[pi, 2*pi - Delta]`` covers ``psi`` (mod 2*pi)."""
    out = []
    for k, phase in enumerate(schedule.phases, start=1):
        local = (psi - phase - math.pi) % TWO_PI + math.pi
        if local <= TWO_PI - schedule.delta:
            out.append(k)
    return out


def follower_travel(params: DesignParams, schedule: DriveSchedule) -> float:
    """Net follower displacement accumulated over the schedule's turn."""
    total = 0.0
    for span in schedule.spans:
        a = schedule.local_angle(span.cam, span.psi_start)
        b = schedule.local_angle(span.cam, span.psi_end)
        total += float(displacement_s(params, b) - displacement_s(params, a))
    return total


@dataclass
class AnalysisReport:
    """Everything reported for one design point and mechanism kind.

    Angles are stored in radians, v_L,max in mm.
    """

    params: DesignParams
    mechanism: Mechanism
    feasibility: FeasibilityReport
    delta: float | None = None
    schedule: DriveSchedule | None = None
    mu_min: float | None = None
    mu_max: float | None = None
    service_factor: float | None = None
    vL_max: float | None = None
    z: float | None = None
    pin: PinModel | None = None
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.feasibility.all_ok and not self.errors


def design_report(params: DesignParams, pin: PinModel, kind: Mechanism) -> AnalysisReport:
    """Bundle geometry, pressure-angle and pin-load results for one design.

    Failures of individual quantities are collected in ``errors`` rather
    than raised, so infeasible designs can still be inspected.
    """
    kind = Mechanism(kind)
    report = AnalysisReport(params=params, mechanism=kind, feasibility=feasibility(params), pin=pin)
    try:
        report.delta = extended_angle(params)
    except SlideOCamError as exc:
        report.errors.append(f"{type(exc).__name__}: {exc}")
        return report
    d = report.delta
    report.schedule = drive_schedule(params, kind, d)
    report.mu_min, report.mu_max = pressure_angle_extremes(params, kind, d)
    report.service_factor = service_factor(params, kind, delta=d)
    try:
        report.vL_max = max_pin_deflection(pin, params, kind, d)
        report.z = objective_z(params, kind, d)
    except SlideOCamError as exc:
        report.errors.append(f"{type(exc).__name__}: {exc}")
    return report


def scheduled_pressure_angle(params: DesignParams, schedule: DriveSchedule, psi: float) -> float:
    """Pressure angle of whichever cam drives at shaft angle ``psi``."""
    cam = schedule.cam_at(psi)
    t = schedule.start + (psi - schedule.start) % TWO_PI
    return float(pressure_angle(params, schedule.local_angle(cam, t)))
