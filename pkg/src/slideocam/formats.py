"""File formats: profile CSV, sweep CSV, SVG, JSON reports and config files.

Profile CSV
    header ``psi_rad,u_mm,v_mm``, LF line endings, 9 significant digits.
Sweep CSV
    header ``eta,a4_mm,a5_mm,z,vLmax_um,mu_min_deg,mu_max_deg,service_pct,error``;
    full precision (``repr``) unless ``rounding="published"``.  Missing numbers are
    written as empty fields.
SVG
    millimetre user units, one ``path`` per curve, v negated so the drawing
    has the usual y-up orientation on screen.
Config
    flat ``key = value`` lines; ``#`` starts a comment.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .errors import InvalidParameters
from .geometry import CurveKind, DesignParams, ProfileCurve
from .kinematics import FeasibilityReport, Mechanism
from .loads import PinModel
from .mechanism import AnalysisReport, DriveSchedule, DriveSpan
from .optimizer import OptimizationResult, SweepRow

PROFILE_HEADER = ("psi_rad", "u_mm", "v_mm")
SWEEP_HEADER = ("eta", "a4_mm", "a5_mm", "z", "vLmax_um", "mu_min_deg", "mu_max_deg",
                "service_pct", "error")
_SWEEP_FIELDS = ("eta", "a4", "a5", "z", "vLmax_um", "mu_min_deg", "mu_max_deg", "service_pct")

SVG_STROKE_MM = 0.2


# --- profile CSV ----------------------------------------------------------

def _fmt9(x: float) -> str:
    return f"{x:.9g}"


def profile_csv(curve: ProfileCurve) -> str:
    lines = [",".join(PROFILE_HEADER)]
    lines.extend(f"{_fmt9(a)},{_fmt9(b)},{_fmt9(c)}" for a, b, c in zip(curve.psi, curve.u, curve.v))
    return "\n".join(lines) + "\n"


def read_profile_csv(text: str, kind: CurveKind = CurveKind.CAM_PROFILE) -> ProfileCurve:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != PROFILE_HEADER:
        raise InvalidParameters(f"expected header {','.join(PROFILE_HEADER)}")
    data = np.array([[float(x) for x in r] for r in rows[1:]], dtype=float).reshape(-1, 3)
    return ProfileCurve(kind=CurveKind(kind), psi=data[:, 0], u=data[:, 1], v=data[:, 2])


# --- sweep CSV ------------------------------------------------------------

def _published_format(name: str, x: float) -> str:
    if name == "z":
        return f"{x:.0f}" if x < 1e6 else f"{x:.3g}"
    if name == "eta":
        return f"{x:.4g}"
    return f"{x:.2f}"


def sweep_csv(rows, rounding: str = "full") -> str:
    if rounding not in ("full", "published"):
        raise InvalidParameters(f"unknown rounding {rounding!r}")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        cells = []
        for name in _SWEEP_FIELDS:
            x = getattr(row, name)
            if math.isnan(x):
                cells.append("")
            elif rounding == "published":
                cells.append(_published_format(name, x))
            else:
                cells.append(repr(float(x)))
        cells.append(row.error)
        writer.writerow(cells)
    return out.getvalue()


def read_sweep_csv(text: str) -> list[SweepRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != SWEEP_HEADER:
        raise InvalidParameters(f"expected header {','.join(SWEEP_HEADER)}")
    rows = []
    for cells in reader:
        values = {name: (float(c) if c else math.nan) for name, c in zip(_SWEEP_FIELDS, cells)}
        rows.append(SweepRow(error=cells[-1], **values))
    return rows


# --- SVG ------------------------------------------------------------------

def profile_svg(curves, margin: float = 5.0) -> str:
    """Render curves as SVG paths.  Cam profiles are closed with ``Z``."""
    curves = list(curves)
    u = np.concatenate([c.u for c in curves])
    v = -np.concatenate([c.v for c in curves])
    x0, y0 = u.min() - margin, v.min() - margin
    w, h = u.max() - u.min() + 2 * margin, v.max() - v.min() + 2 * margin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.4f}mm" height="{h:.4f}mm" '
        f'viewBox="{x0:.4f} {y0:.4f} {w:.4f} {h:.4f}">',
    ]
    for curve in curves:
        pts = " L ".join(f"{a:.5f},{-b:.5f}" for a, b in zip(curve.u, curve.v))
        close = " Z" if curve.kind is CurveKind.CAM_PROFILE else ""
        out.append(f'  <path id="{curve.kind.value}" d="M {pts}{close}" fill="none" '
                   f'stroke="black" stroke-width="{SVG_STROKE_MM}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- JSON -----------------------------------------------------------------

def _num(x):
    if x is None:
        return None
    return float(x)


def report_to_dict(report: AnalysisReport) -> dict:
    pin = report.pin
    schedule = None
    if report.schedule is not None:
        schedule = {
            "phases_rad": list(report.schedule.phases),
            "spans": [{"cam": s.cam, "psi_start_rad": s.psi_start, "psi_end_rad": s.psi_end}
                      for s in report.schedule.spans],
        }
    return {
        "params": {"p": report.params.p, "eta": report.params.eta,
                   "a4": report.params.a4, "b": report.params.b},
        "pin": None if pin is None else {"L": pin.L, "tau": pin.tau, "E": pin.E, "a5": pin.a5},
        "mechanism": report.mechanism.value,
        "feasibility": report.feasibility.as_dict(),
        "delta_rad": _num(report.delta),
        "schedule": schedule,
        "mu_min_rad": _num(report.mu_min),
        "mu_max_rad": _num(report.mu_max),
        "service_factor": _num(report.service_factor),
        "vL_max_mm": _num(report.vL_max),
        "z": _num(report.z),
        "errors": list(report.errors),
    }


def report_from_dict(d: dict) -> AnalysisReport:
    params = DesignParams(**d["params"])
    mech = Mechanism(d["mechanism"])
    feas = FeasibilityReport(**{k: v for k, v in d["feasibility"].items() if k != "all_ok"})
    schedule = None
    if d.get("schedule") is not None:
        spans = tuple(DriveSpan(s["cam"], s["psi_start_rad"], s["psi_end_rad"])
                      for s in d["schedule"]["spans"])
        schedule = DriveSchedule(mech, spans, tuple(d["schedule"]["phases_rad"]), d["delta_rad"])
    pin = None if d.get("pin") is None else PinModel(**d["pin"])
    return AnalysisReport(
        params=params, mechanism=mech, feasibility=feas, delta=d["delta_rad"], schedule=schedule,
        mu_min=d["mu_min_rad"], mu_max=d["mu_max_rad"], service_factor=d["service_factor"],
        vL_max=d["vL_max_mm"], z=d["z"], pin=pin, errors=list(d["errors"]),
    )


def report_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def parse_report_json(text: str) -> AnalysisReport:
    return report_from_dict(json.loads(text))


def report_text(report: AnalysisReport) -> str:
    p = report.params
    lines = [
        f"design: p={p.p:g} mm  eta={p.eta:.6g}  a4={p.a4:.6g} mm  b={p.b:g} mm  "
        f"mechanism={report.mechanism.value}",
    ]
    if report.delta is not None:
        lines.append(f"extended angle: {math.degrees(report.delta):.4f} deg ({report.delta:.6f} rad)")
    if report.schedule is not None:
        for s in report.schedule.spans:
            lines.append(f"  cam {s.cam} drives [{math.degrees(s.psi_start):.3f}, "
                         f"{math.degrees(s.psi_end):.3f}) deg")
    if report.mu_min is not None:
        lines.append(f"|mu| min / max: {math.degrees(report.mu_min):.2f} / "
                     f"{math.degrees(report.mu_max):.2f} deg")
        lines.append(f"service factor: {100 * report.service_factor:.2f} %")
    if report.vL_max is not None:
        lines.append(f"max pin deflection: {1e3 * report.vL_max:.3f} um")
        lines.append(f"objective z: {report.z:.6g}")
    lines.append("feasibility:")
    for name, ok in report.feasibility.as_dict().items():
        lines.append(f"  {name:20s} {'ok' if ok else 'FAIL'}")
    lines.extend(f"error: {e}" for e in report.errors)
    return "\n".join(lines) + "\n"


def optimization_text(res: OptimizationResult) -> str:
    c = res.constraints
    g3 = "n/a" if c.g3 is None else f"{c.g3:.3e}"
    return "\n".join([
        f"mechanism: {res.mechanism.value}",
        f"eta = {res.eta_opt:.6f}",
        f"a4  = {res.a4_opt:.6f} mm",
        f"a5  = {res.a5_opt:.6f} mm",
        f"z   = {res.z_opt:.6g}",
        f"g1..g5 = {c.g1:.3e}, {c.g2:.3e}, {g3}, {c.g4:.3e}, {c.g5:.3e}",
        f"active: {', '.join(sorted(c.active)) or 'none'}",
        f"golden-section iterations: {res.iterations}",
    ]) + "\n"


def optimization_dict(res: OptimizationResult) -> dict:
    return {"mechanism": res.mechanism.value, "eta": res.eta_opt, "a4_mm": res.a4_opt,
            "a5_mm": res.a5_opt, "z": res.z_opt, "constraints": res.constraints.as_dict(),
            "iterations": res.iterations}


# --- run configuration ----------------------------------------------------

@dataclass
class RunConfig:
    """CLI-level settings.  Torque is in N*m here and converted at :meth:`pin`."""

    p: float = 50.0
    eta: float | None = None
    a4: float | None = None
    b: float = 9.5
    L: float = 10.0
    tau: float = 1.2
    E: float = 2.0e5
    mechanism: str = "coaxial"
    samples: int = 1024
    format: str = "text"

    def pin(self) -> PinModel:
        return PinModel(L=self.L, tau=self.tau * 1000.0, E=self.E)

    def update(self, values: dict) -> "RunConfig":
        known = {f.name: f for f in fields(self)}
        for key, raw in values.items():
            if raw is None:
                continue
            if key not in known:
                raise InvalidParameters(f"unknown config key {key!r}")
            setattr(self, key, _coerce(known[key].type, raw, key))
        return self


def _coerce(typ, raw, key):
    if not isinstance(raw, str):
        return raw
    try:
        if "int" in str(typ):
            return int(raw)
        if "float" in str(typ):
            return float(raw)
    except ValueError as exc:
        raise InvalidParameters(f"bad value for {key}: {raw!r}") from exc
    return raw


def parse_config(text: str) -> dict[str, str]:
    out = {}
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParameters(f"config line {n}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key] = value
    return out


def load_config(path) -> dict[str, str]:
    return parse_config(Path(path).read_text())
