import math

import numpy as np
import pytest

from published_tables import TABLE1, TABLE2
from slideocam import (DesignParams, Mechanism, PinModel, design_report, drive_schedule, layout,
                       pressure_angle)
from slideocam.mechanism import capable_cams, follower_travel, scheduled_pressure_angle

TWO_PI = 2 * math.pi
PIN = PinModel()


def design(eta, a4=None):
    return DesignParams(p=50, eta=eta, a4=a4 if a4 is not None else min(eta * 50 - 9.5, 25 - 1e-9))


class TestLayout:
    def test_noncoaxial_offsets(self):
        lay = layout(design(0.37, 9), Mechanism.NONCOAXIAL3)
        assert lay.offsets_y == pytest.approx((0.0, 200 / 3, 400 / 3), abs=1e-12)
        assert [math.degrees(x) for x in lay.phases] == pytest.approx([0, 120, 240])

    def test_offsets_scale_with_pitch(self):
        lay = layout(DesignParams(p=30, eta=0.37, a4=5), "noncoaxial3")
        assert lay.offsets_y == pytest.approx((0.0, 40.0, 80.0))

    def test_coaxial(self):
        lay = layout(design(0.5), Mechanism.COAXIAL)
        assert lay.offsets_y == (0.0, 0.0)
        assert lay.phases == (0.0, math.pi)


class TestSchedule:
    @pytest.mark.parametrize("mech,start", [(Mechanism.COAXIAL, math.pi),
                                            (Mechanism.NONCOAXIAL3, 4 * math.pi / 3)])
    def test_first_span(self, mech, start):
        params = design(0.37, 9)
        sched = drive_schedule(params, mech)
        d = sched.delta
        assert sched.spans[0].psi_start == pytest.approx(start - d, abs=1e-14)
        assert sched.spans[0].psi_end == pytest.approx(TWO_PI - d, abs=1e-14)

    @pytest.mark.parametrize("mech", list(Mechanism))
    def test_spans_are_translates(self, mech):
        sched = drive_schedule(design(0.4), mech)
        step = TWO_PI / mech.n_cams
        for k, span in enumerate(sched.spans):
            assert span.cam == k + 1
            assert span.psi_start == pytest.approx(sched.spans[0].psi_start + k * step, abs=1e-13)
            assert span.psi_end - span.psi_start == pytest.approx(step, abs=1e-13)

    @pytest.mark.parametrize("mech", list(Mechanism))
    def test_partition(self, mech):
        sched = drive_schedule(design(0.37, 9), mech)
        for a, b in zip(sched.spans, sched.spans[1:]):
            assert b.psi_start == a.psi_end
        assert sched.spans[-1].psi_end - sched.spans[0].psi_start == pytest.approx(TWO_PI)
        psi = np.linspace(0, TWO_PI, 3001)
        for x in psi:
            assert sum(s.contains(sched.start + (x - sched.start) % TWO_PI) for s in sched.spans) == 1

    @pytest.mark.parametrize("eta", [0.69, 0.5, 0.37, 1 / math.pi])
    @pytest.mark.parametrize("mech", list(Mechanism))
    def test_lowest_pressure_angle_cam_drives(self, eta, mech):
        params = design(eta)
        sched = drive_schedule(params, mech)
        bounds = np.array([s.psi_start for s in sched.spans])
        for psi in np.linspace(0, TWO_PI, 2000, endpoint=False):
            t = sched.start + (psi - sched.start) % TWO_PI
            if np.min(np.abs(bounds - t)) < 1e-9:
                continue
            cams = capable_cams(sched, psi)
            assert cams
            mus = {k: abs(pressure_angle(params, (psi - sched.phases[k - 1] - math.pi) % TWO_PI
                                         + math.pi)) for k in cams}
            best = min(mus, key=mus.get)
            assert sched.cam_at(psi) == best
            assert abs(scheduled_pressure_angle(params, sched, psi)) == pytest.approx(mus[best])

    @pytest.mark.parametrize("mech", list(Mechanism))
    def test_handover_goes_to_incoming_cam(self, mech):
        params = design(0.37, 9)
        sched = drive_schedule(params, mech)
        for prev, nxt in zip(sched.spans, sched.spans[1:]):
            assert sched.cam_at(nxt.psi_start) == nxt.cam
            # the outgoing cam is at the end of its contact arc there
            out_local = sched.local_angle(prev.cam, nxt.psi_start) % TWO_PI
            assert out_local == pytest.approx((TWO_PI - sched.delta) % TWO_PI, abs=1e-12)
        assert sched.cam_at(sched.start) == 1

    @pytest.mark.parametrize("mech", list(Mechanism))
    def test_follower_travel_one_pitch(self, mech):
        params = design(0.37, 9)
        assert follower_travel(params, drive_schedule(params, mech)) == pytest.approx(50.0)

    def test_cam_at_periodic(self):
        sched = drive_schedule(design(0.4), "noncoaxial3")
        for psi in (0.1, 2.0, 5.5):
            assert sched.cam_at(psi) == sched.cam_at(psi + TWO_PI) == sched.cam_at(psi - 3 * TWO_PI)


class TestReport:
    def test_table2_reference_row(self):
        r = design_report(design(0.37, 9), PIN, Mechanism.NONCOAXIAL3)
        assert r.ok
        assert 1e3 * r.vL_max == pytest.approx(9.76, abs=0.02)
        assert 100 * r.service_factor == pytest.approx(88.03, abs=0.5)
        assert math.degrees(r.mu_min) == pytest.approx(17.75, abs=0.2)
        assert math.degrees(r.mu_max) == pytest.approx(32.95, abs=0.2)

    def test_coaxial_reference_row(self):
        r = design_report(design(0.37, 9), PIN, Mechanism.COAXIAL)
        assert 100 * r.service_factor == pytest.approx(58.69, abs=0.5)

    def test_infeasible_design_still_reported(self):
        r = design_report(DesignParams(p=50, eta=0.2, a4=3.0), PIN, Mechanism.COAXIAL)
        assert not r.ok
        assert "convex" in " ".join(r.feasibility.failures())

    def test_no_root_collected(self):
        r = design_report(DesignParams(p=50, eta=0.2, a4=30.0), PIN, Mechanism.COAXIAL)
        assert not r.ok and r.delta is None
        assert r.errors and r.errors[0].startswith("NoRoot")

    def test_degenerate_pin_collected(self):
        r = design_report(DesignParams(p=50, eta=0.5, a4=4.0), PIN, Mechanism.COAXIAL)
        assert r.vL_max is None and any("DegeneratePin" in e for e in r.errors)


class TestCoaxialVersusThreeCam:
    @pytest.mark.parametrize("row1,row2", list(zip(TABLE1[1:], TABLE2)))
    def test_noncoaxial_is_better(self, row1, row2):
        params = design(row1[0])
        co = design_report(params, PIN, Mechanism.COAXIAL)
        nc = design_report(params, PIN, Mechanism.NONCOAXIAL3)
        assert nc.service_factor >= co.service_factor
        assert nc.mu_max < co.mu_max
        assert nc.mu_min == pytest.approx(co.mu_min, abs=1e-15)
        assert nc.vL_max < co.vL_max
