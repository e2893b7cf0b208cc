"""Command-line interface.

    slideocam profile  --eta 0.37 --a4 9 --format csv --out cam.csv
    slideocam analyze  --eta 0.37 --a4 9 --mechanism noncoaxial3
    slideocam sweep    --preset table2 --mechanism noncoaxial3
    slideocam optimize [--eta-min X] [--eta-max Y]
    slideocam layout   --eta 0.37 --a4 9 --mechanism noncoaxial3

Angles on the command line are degrees, torque N*m, lengths mm.
Exit codes: 0 success, 2 invalid input, 3 infeasible design.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import formats
from .errors import InfeasibleDesign, InvalidParameters
from .geometry import CurveKind, DesignParams, sample_profile
from .kinematics import Mechanism, feasibility, service_factor
from .mechanism import design_report, drive_schedule, layout
from .optimizer import TABLE1_ETAS, TABLE2_ETAS, max_roller_radius, optimize, sweep

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE = 0, 2, 3

PRESETS = {"table1": TABLE1_ETAS, "table2": TABLE2_ETAS}


def _common(parser: argparse.ArgumentParser):
    g = parser.add_argument_group("design")
    g.add_argument("--p", type=float, help="pitch, mm (default 50)")
    g.add_argument("--eta", type=float, help="offset ratio e/p")
    g.add_argument("--a4", type=float,
                   help="roller radius, mm (default: largest admissible for eta)")
    g.add_argument("--b", type=float, help="camshaft radius, mm (default 9.5)")
    g.add_argument("--L", type=float, help="pin free length, mm (default 10)")
    g.add_argument("--tau", type=float, help="motor torque, N*m (default 1.2)")
    g.add_argument("--E", type=float, help="Young modulus, MPa (default 2e5)")
    g.add_argument("--mechanism", choices=[m.value for m in Mechanism])
    g.add_argument("--samples", type=int, help="profile samples (default 1024)")
    g.add_argument("--format", choices=["csv", "svg", "json", "text"])
    g.add_argument("--out", type=Path, help="output file (default stdout)")
    g.add_argument("--config", type=Path, help="key = value file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slideocam", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    prof = sub.add_parser("profile", help="export cam profile / pitch curve geometry")
    _common(prof)
    prof.add_argument("--curve", choices=["cam", "pitch", "both"], default="cam")
    prof.add_argument("--allow-infeasible", action="store_true",
                      help="export even when the feasibility checks fail")

    ana = sub.add_parser("analyze", help="pressure angle, service factor, pin deflection")
    _common(ana)
    ana.add_argument("--threshold", type=float, default=30.0,
                     help="service-factor pressure-angle bound, degrees")

    sw = sub.add_parser("sweep", help="design table over a list of eta values")
    _common(sw)
    sw.add_argument("--preset", choices=sorted(PRESETS))
    sw.add_argument("--etas", help="comma-separated eta values")
    sw.add_argument("--round", choices=["full", "published"], default="full", dest="rounding")
    sw.add_argument("--workers", type=int, default=1)

    opt = sub.add_parser("optimize", help="minimize the pin-deflection objective")
    _common(opt)
    opt.add_argument("--eta-min", type=float, default=1 / math.pi)
    opt.add_argument("--eta-max", type=float, default=1.0)

    lay = sub.add_parser("layout", help="cam phases, shaft offsets and drive schedule")
    _common(lay)
    return parser


def _config(args) -> formats.RunConfig:
    cfg = formats.RunConfig()
    if args.config is not None:
        cfg.update(formats.load_config(args.config))
    cfg.update({k: getattr(args, k) for k in
                ("p", "eta", "a4", "b", "L", "tau", "E", "mechanism", "samples", "format")})
    return cfg


def _design(cfg: formats.RunConfig) -> DesignParams:
    if cfg.eta is None:
        raise InvalidParameters("--eta is required")
    a4 = cfg.a4
    if a4 is None:
        DesignParams(p=cfg.p, eta=cfg.eta, a4=1.0, b=cfg.b)  # validates eta first
        a4 = max_roller_radius(cfg.p, cfg.b, cfg.eta)
    return DesignParams(p=cfg.p, eta=cfg.eta, a4=a4, b=cfg.b)


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_bytes(text.encode())


def cmd_profile(args) -> int:
    cfg = _config(args)
    fmt = cfg.format if args.format else "csv"
    params = _design(cfg)
    feas = feasibility(params)
    if not feas.all_ok and not args.allow_infeasible:
        sys.stderr.write(f"infeasible design: {', '.join(feas.failures())}\n")
        return EXIT_INFEASIBLE
    kinds = {"cam": [CurveKind.CAM_PROFILE], "pitch": [CurveKind.PITCH_CURVE],
             "both": [CurveKind.CAM_PROFILE, CurveKind.PITCH_CURVE]}[args.curve]
    curves = [sample_profile(params, k, cfg.samples) for k in kinds]
    if fmt == "csv":
        if len(curves) != 1:
            raise InvalidParameters("csv output holds one curve; use --curve cam or pitch")
        text = formats.profile_csv(curves[0])
    elif fmt == "svg":
        text = formats.profile_svg(curves)
    elif fmt == "json":
        text = json.dumps({c.kind.value: {"psi_rad": c.psi.tolist(), "u_mm": c.u.tolist(),
                                          "v_mm": c.v.tolist()} for c in curves}) + "\n"
    else:
        raise InvalidParameters("profile supports csv, svg or json")
    _emit(text, args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    cfg = _config(args)
    params = _design(cfg)
    report = design_report(params, cfg.pin(), Mechanism(cfg.mechanism))
    if args.threshold != 30.0 and report.delta is not None:
        report.service_factor = service_factor(params, report.mechanism,
                                               math.radians(args.threshold), report.delta)
    if cfg.format == "json":
        _emit(formats.report_json(report), args.out)
    else:
        _emit(formats.report_text(report), args.out)
    return EXIT_OK if report.ok else EXIT_INFEASIBLE


def cmd_sweep(args) -> int:
    cfg = _config(args)
    if args.etas:
        try:
            etas = [float(x) for x in args.etas.split(",") if x.strip()]
        except ValueError as exc:
            raise InvalidParameters(f"bad --etas list: {args.etas!r}") from exc
    elif args.preset:
        etas = list(PRESETS[args.preset])
    else:
        raise InvalidParameters("give --preset or --etas")
    rows = sweep(cfg.p, cfg.b, cfg.pin(), etas, Mechanism(cfg.mechanism), workers=args.workers)
    _emit(formats.sweep_csv(rows, args.rounding), args.out)
    return EXIT_OK


def cmd_optimize(args) -> int:
    cfg = _config(args)
    res = optimize(cfg.p, cfg.b, (args.eta_min, args.eta_max), Mechanism(cfg.mechanism))
    if cfg.format == "json":
        _emit(json.dumps(formats.optimization_dict(res), indent=2) + "\n", args.out)
    else:
        _emit(formats.optimization_text(res), args.out)
    return EXIT_OK


def cmd_layout(args) -> int:
    cfg = _config(args)
    params = _design(cfg)
    kind = Mechanism(cfg.mechanism)
    lay = layout(params, kind)
    sched = drive_schedule(params, kind)
    data = {
        "mechanism": kind.value,
        "phases_deg": [math.degrees(x) for x in lay.phases],
        "offsets_y_mm": list(lay.offsets_y),
        "schedule_deg": [{"cam": s.cam, "start": math.degrees(s.psi_start),
                          "end": math.degrees(s.psi_end)} for s in sched.spans],
    }
    if cfg.format == "json":
        text = json.dumps(data, indent=2) + "\n"
    else:
        lines = [f"mechanism: {kind.value}"]
        for k, (ph, y) in enumerate(zip(data["phases_deg"], data["offsets_y_mm"]), start=1):
            lines.append(f"cam {k}: phase {ph:.1f} deg, shaft at y = {y:.4f} mm")
        for s in data["schedule_deg"]:
            lines.append(f"cam {s['cam']} drives [{s['start']:.3f}, {s['end']:.3f}) deg")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {"profile": cmd_profile, "analyze": cmd_analyze, "sweep": cmd_sweep,
            "optimize": cmd_optimize, "layout": cmd_layout}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InvalidParameters as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    except InfeasibleDesign as exc:
        sys.stderr.write(f"infeasible design: {exc}\n")
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
