import json
import math
import subprocess
import sys

import pytest

from slideocam import CurveKind, Mechanism
from slideocam.cli import main
from slideocam.formats import (RunConfig, parse_config, parse_report_json, profile_csv,
                               read_profile_csv, read_sweep_csv, report_json, sweep_csv)
from slideocam.optimizer import SweepRow


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestProfile:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "profile", "--eta", "0.37", "--a4", "9", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "psi_rad,u_mm,v_mm"
        assert len(lines) == 1025
        assert "\r" not in out

    def test_csv_roundtrip_bytes(self, capsys):
        _, out, _ = run(capsys, "profile", "--eta", "0.5", "--a4", "15.5")
        assert profile_csv(read_profile_csv(out)) == out

    def test_pitch_csv_samples(self, capsys):
        _, out, _ = run(capsys, "profile", "--eta", "0.5", "--curve", "pitch", "--samples", "64")
        curve = read_profile_csv(out, CurveKind.PITCH_CURVE)
        assert len(curve) == 64 and curve.psi[-1] == pytest.approx(2 * math.pi)

    def test_svg(self, capsys, tmp_path):
        target = tmp_path / "cam.svg"
        code, _, _ = run(capsys, "profile", "--eta", "0.37", "--a4", "9", "--format", "svg",
                         "--out", str(target))
        assert code == 0
        svg = target.read_text()
        assert svg.count("<path") == 1 and " Z\"" in svg
        assert 'width="' in svg and "mm" in svg

    def test_svg_both_curves(self, capsys):
        _, out, _ = run(capsys, "profile", "--eta", "0.37", "--a4", "9", "--format", "svg",
                        "--curve", "both")
        assert out.count("<path") == 2

    def test_csv_both_rejected(self, capsys):
        code, _, err = run(capsys, "profile", "--eta", "0.37", "--curve", "both", "--format", "csv")
        assert code == 2 and "one curve" in err

    def test_singular_eta(self, capsys):
        code, _, err = run(capsys, "profile", "--eta", "0.159155", "--a4", "10")
        assert code == 2
        assert "1/(2*pi)" in err

    def test_missing_eta(self, capsys):
        code, _, err = run(capsys, "profile")
        assert code == 2 and "--eta" in err

    def test_infeasible_refused(self, capsys):
        code, out, err = run(capsys, "profile", "--eta", "0.2", "--a4", "3")
        assert code == 3 and out == "" and "convex_pitch" in err

    def test_infeasible_allowed(self, capsys):
        code, out, _ = run(capsys, "profile", "--eta", "0.2", "--a4", "3", "--allow-infeasible",
                           "--samples", "16")
        assert code == 0 and len(out.splitlines()) == 17


class TestAnalyze:
    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "analyze", "--eta", "0.37", "--a4", "9",
                           "--mechanism", "noncoaxial3", "--format", "json")
        assert code == 0
        report = parse_report_json(out)
        assert report_json(report) == out
        assert 100 * report.service_factor == pytest.approx(88.03, abs=0.5)
        assert 1e3 * report.vL_max == pytest.approx(9.76, abs=0.02)
        assert report.mechanism is Mechanism.NONCOAXIAL3

    def test_text(self, capsys):
        code, out, _ = run(capsys, "analyze", "--eta", "0.37", "--a4", "9")
        assert code == 0
        assert "service factor: 58.69 %" in out
        assert "FAIL" not in out

    def test_threshold(self, capsys):
        _, out45, _ = run(capsys, "analyze", "--eta", "0.37", "--a4", "9", "--format", "json",
                          "--threshold", "45")
        _, out30, _ = run(capsys, "analyze", "--eta", "0.37", "--a4", "9", "--format", "json")
        assert json.loads(out45)["service_factor"] > json.loads(out30)["service_factor"]

    def test_nonconvex_exit(self, capsys):
        code, out, _ = run(capsys, "analyze", "--eta", "0.2", "--a4", "3")
        assert code == 3
        assert "convex_pitch" in out and "FAIL" in out

    def test_torque_units(self, capsys):
        _, a, _ = run(capsys, "analyze", "--eta", "0.4", "--format", "json")
        _, b, _ = run(capsys, "analyze", "--eta", "0.4", "--format", "json", "--tau", "2.4")
        assert json.loads(b)["vL_max_mm"] == pytest.approx(2 * json.loads(a)["vL_max_mm"])


class TestSweep:
    @pytest.mark.parametrize("preset,n", [("table1", 11), ("table2", 10)])
    def test_presets(self, capsys, preset, n):
        code, out, _ = run(capsys, "sweep", "--preset", preset)
        assert code == 0
        rows = read_sweep_csv(out)
        assert len(rows) == n and all(r.ok for r in rows)

    def test_single_eta(self, capsys):
        _, out, _ = run(capsys, "sweep", "--etas", "0.5", "--round", "published")
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("0.5,15.50,6.56,")

    def test_error_row(self, capsys):
        _, out, _ = run(capsys, "sweep", "--etas", "0.5,0.2")
        rows = read_sweep_csv(out)
        assert rows[0].ok and not rows[1].ok and "g1" in rows[1].error

    def test_workers_identical(self, capsys):
        _, serial, _ = run(capsys, "sweep", "--preset", "table2", "--mechanism", "noncoaxial3")
        _, parallel, _ = run(capsys, "sweep", "--preset", "table2", "--mechanism", "noncoaxial3",
                             "--workers", "4")
        assert serial == parallel

    def test_full_precision_roundtrip(self, capsys):
        _, out, _ = run(capsys, "sweep", "--preset", "table1")
        assert sweep_csv(read_sweep_csv(out)) == out

    def test_needs_etas(self, capsys):
        code, _, _ = run(capsys, "sweep")
        assert code == 2

    def test_bad_etas(self, capsys):
        code, _, _ = run(capsys, "sweep", "--etas", "0.4,abc")
        assert code == 2


class TestOptimize:
    def test_defaults(self, capsys):
        code, out, _ = run(capsys, "optimize", "--format", "json")
        assert code == 0
        res = json.loads(out)
        assert res["eta"] == pytest.approx(0.69, abs=0.01)
        assert res["a4_mm"] == pytest.approx(25, abs=0.1)
        assert {"g4", "g5"} <= set(res["constraints"]["active"])

    def test_eta_max(self, capsys):
        _, out, _ = run(capsys, "optimize", "--eta-max", "0.38", "--format", "json")
        assert json.loads(out)["a4_mm"] == pytest.approx(9.5, abs=1e-6)

    def test_infeasible(self, capsys):
        code, _, err = run(capsys, "optimize", "--b", "40", "--eta-max", "0.9")
        assert code == 3 and "infeasible" in err

    def test_text(self, capsys):
        _, out, _ = run(capsys, "optimize")
        assert out.startswith("mechanism: coaxial") and "active:" in out


class TestLayout:
    def test_noncoaxial(self, capsys):
        code, out, _ = run(capsys, "layout", "--eta", "0.37", "--a4", "9",
                           "--mechanism", "noncoaxial3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["offsets_y_mm"] == pytest.approx([0, 200 / 3, 400 / 3])
        assert data["phases_deg"] == pytest.approx([0, 120, 240])
        assert len(data["schedule_deg"]) == 3

    def test_text(self, capsys):
        _, out, _ = run(capsys, "layout", "--eta", "0.5", "--a4", "15.5")
        assert "cam 2: phase 180.0 deg" in out


class TestConfig:
    def test_parse(self):
        cfg = parse_config("eta = 0.37  # offset\n\n# comment\nmechanism=noncoaxial3\n")
        assert cfg == {"eta": "0.37", "mechanism": "noncoaxial3"}

    def test_bad_line(self):
        with pytest.raises(ValueError):
            parse_config("eta 0.4\n")

    def test_unknown_key(self):
        with pytest.raises(ValueError):
            RunConfig().update({"pitch": "50"})

    def test_flags_override_file(self, capsys, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("eta = 0.37\na4 = 9\nmechanism = noncoaxial3\nformat = json\n")
        _, from_file, _ = run(capsys, "analyze", "--config", str(path))
        assert parse_report_json(from_file).mechanism is Mechanism.NONCOAXIAL3
        _, overridden, _ = run(capsys, "analyze", "--config", str(path), "--mechanism", "coaxial")
        report = parse_report_json(overridden)
        assert report.mechanism is Mechanism.COAXIAL
        assert report.params.a4 == 9.0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "slideocam", "layout", "--eta", "0.5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "cam 1" in proc.stdout


def test_sweep_row_nan_fields_blank():
    text = sweep_csv([SweepRow(eta=0.2, error="boom")])
    assert text.splitlines()[1] == "0.2,,,,,,,,boom"
