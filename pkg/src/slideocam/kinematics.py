"""Pressure angle, service factor, curvature and feasibility checks."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameters, UndercutSingularity
from .geometry import TWO_PI, DesignParams, displacement_ds, displacement_s, extended_angle

# Margin applied to strict inequalities.
STRICT_MARGIN = 1e-9

SERVICE_THRESHOLD = math.radians(30.0)

ETA_CONVEX = 1.0 / math.pi
ETA_BRANCH = 2.0 / math.pi


class Mechanism(enum.Enum):
    COAXIAL = "coaxial"
    NONCOAXIAL3 = "noncoaxial3"

    @property
    def n_cams(self) -> int:
        return 2 if self is Mechanism.COAXIAL else 3

    @property
    def drive_length(self) -> float:
        """Shaft angle during which one cam drives the follower."""
        return TWO_PI / self.n_cams


@dataclass(frozen=True)
class DrivingInterval:
    psi_start: float
    psi_end: float
    mechanism: Mechanism

    def __post_init__(self):
        if not self.psi_start < self.psi_end:
            raise InvalidParameters("driving interval must have psi_start < psi_end")

    @property
    def length(self) -> float:
        return self.psi_end - self.psi_start


class Branch(enum.Enum):
    TWO_MAXIMA = "two_maxima"
    SINGLE_MAXIMUM = "single_maximum"
    BOUNDARY = "boundary"


class Extremum(enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class CurvatureExtrema:
    roots: tuple[tuple[float, Extremum], ...]
    kappa_p_max: float
    branch: Branch


@dataclass(frozen=True)
class FeasibilityReport:
    eta_ok_lower: bool
    roller_fits_pitch: bool
    roller_clears_shaft: bool
    convex_pitch: bool
    no_undercut: bool

    @property
    def all_ok(self) -> bool:
        return (self.eta_ok_lower and self.roller_fits_pitch and self.roller_clears_shaft
                and self.convex_pitch and self.no_undercut)

    def failures(self) -> list[str]:
        return [name for name, ok in self.as_dict().items() if name != "all_ok" and not ok]

    def as_dict(self) -> dict[str, bool]:
        return {
            "eta_ok_lower": self.eta_ok_lower,
            "roller_fits_pitch": self.roller_fits_pitch,
            "roller_clears_shaft": self.roller_clears_shaft,
            "convex_pitch": self.convex_pitch,
            "no_undercut": self.no_undercut,
            "all_ok": self.all_ok,
        }


# --- pressure angle -------------------------------------------------------

def pressure_angle(params: DesignParams, psi):
    """Pressure angle ``arctan((1 - 2*pi*eta)/(psi - pi))``.

    At ``psi == pi`` the limit from the right, ``sign(1 - 2*pi*eta)*pi/2``,
    is returned instead of raising.
    """
    x = np.asarray(psi, dtype=float) - math.pi
    num = -params.c
    with np.errstate(divide="ignore"):
        mu = np.where(x == 0.0, math.copysign(math.pi / 2, num), np.arctan(num / x))
    return mu[()]


def driving_interval(params: DesignParams, mechanism: Mechanism,
                     delta: float | None = None) -> DrivingInterval:
    """Effective drive arc of cam 1 once lower-|mu| handover is applied.

    Coaxial pair: ``[pi - Delta, 2*pi - Delta]``; three non-coaxial cams:
    ``[4*pi/3 - Delta, 2*pi - Delta]``.
    """
    mechanism = Mechanism(mechanism)
    if delta is None:
        delta = extended_angle(params)
    end = TWO_PI - delta
    return DrivingInterval(end - mechanism.drive_length, end, mechanism)


def pressure_angle_extremes(params: DesignParams, mechanism: Mechanism,
                            delta: float | None = None) -> tuple[float, float]:
    """``(|mu|_min, |mu|_max)`` over the driving interval, in radians.

    |mu| decreases monotonically past psi = pi, so the extremes sit at the
    interval ends.
    """
    iv = driving_interval(params, mechanism, delta)
    mu = np.abs(pressure_angle(params, np.array([iv.psi_start, iv.psi_end])))
    return float(min(mu)), float(max(mu))


def service_factor(params: DesignParams, mechanism: Mechanism,
                   threshold: float = SERVICE_THRESHOLD,
                   delta: float | None = None) -> float:
    """Fraction of the driving interval where ``|mu| <= threshold``.

    Closed form: ``|mu| <= t`` iff ``|psi - pi| >= |1 - 2*pi*eta| / tan(t)``.
    """
    if not 0 < threshold < math.pi / 2:
        raise InvalidParameters("threshold must lie strictly between 0 and 90 degrees")
    iv = driving_interval(params, mechanism, delta)
    x0, x1 = iv.psi_start - math.pi, iv.psi_end - math.pi
    cut = abs(params.c) / math.tan(threshold)
    # measure of [x0, x1] inside the open band (-cut, cut), where |mu| > threshold
    bad = max(0.0, min(x1, cut) - max(x0, -cut))
    return min(1.0, max(0.0, 1.0 - bad / (x1 - x0)))


# --- curvature ------------------------------------------------------------

def parametric_curvature(du, dv, ddu, ddv):
    """Signed curvature of a planar curve from its parameter derivatives.

    ``(v'u'' - u'v'') / (u'^2 + v'^2)^(3/2)``; positive means convex for
    the cam's sense of traversal.
    """
    du, dv, ddu, ddv = (np.asarray(a, dtype=float) for a in (du, dv, ddu, ddv))
    return ((dv * ddu - du * ddv) / (du * du + dv * dv) ** 1.5)[()]


def pitch_curve_derivatives(params: DesignParams, psi):
    """Analytic ``(u_p', v_p', u_p'', v_p'')`` of the pitch curve."""
    psi = np.asarray(psi, dtype=float)
    s = displacement_s(params, psi)
    ds = displacement_ds(params)
    e = params.e
    sin, cos = np.sin(psi), np.cos(psi)
    du = (ds - e) * sin + s * cos
    dv = (ds - e) * cos - s * sin
    ddu = (2 * ds - e) * cos - s * sin
    ddv = -(2 * ds - e) * sin - s * cos
    return du, dv, ddu, ddv


def pitch_curvature(params: DesignParams, psi):
    """Closed-form curvature of the pitch curve."""
    x2 = (np.asarray(psi, dtype=float) - math.pi) ** 2
    c = params.c
    num = x2 + 2 * c * (math.pi * params.eta - 1)
    return (TWO_PI / params.p * num / (x2 + c * c) ** 1.5)[()]


def _kappa_max_two_maxima(p, eta):
    return 4 * math.pi / (3 * p * math.sqrt(6 * eta * math.pi - 3))


def _kappa_max_single(p, eta):
    ep = eta * math.pi
    return 4 * math.pi / p * (2 * ep * ep - 3 * ep + 1) / (4 * ep * ep - 4 * ep + 1) ** 1.5


def kappa_p_max(params: DesignParams) -> float:
    """Global maximum of the pitch-curve curvature over all psi.

    The twin-peak formula applies for 1/(2*pi) < eta < 2/pi, the value at
    psi = pi otherwise.  Both agree at eta = 2/pi.
    """
    eta = params.eta
    if 1 / TWO_PI < eta < ETA_BRANCH:
        return _kappa_max_two_maxima(params.p, eta)
    return _kappa_max_single(params.p, eta)


def curvature_extrema(params: DesignParams) -> CurvatureExtrema:
    """Stationary points of the pitch curvature for a convex pitch curve."""
    eta = params.eta
    if eta < ETA_CONVEX:
        raise InvalidParameters(
            f"curvature extrema assume a convex pitch curve (eta >= 1/pi), got eta={eta}")
    beta = -4 * eta**2 * math.pi**2 + 10 * eta * math.pi - 4
    if math.isclose(eta, ETA_BRANCH, rel_tol=1e-12, abs_tol=0.0):
        return CurvatureExtrema(((math.pi, Extremum.MAX),),
                                _kappa_max_single(params.p, eta), Branch.BOUNDARY)
    if eta < ETA_BRANCH:
        r = math.sqrt(beta)
        roots = ((math.pi - r, Extremum.MAX), (math.pi, Extremum.MIN), (math.pi + r, Extremum.MAX))
        return CurvatureExtrema(roots, _kappa_max_two_maxima(params.p, eta), Branch.TWO_MAXIMA)
    return CurvatureExtrema(((math.pi, Extremum.MAX),),
                            _kappa_max_single(params.p, eta), Branch.SINGLE_MAXIMUM)


def cam_curvature(params: DesignParams, psi):
    """Cam-profile curvature ``kappa_p / (1 - a4*kappa_p)``.

    Raises :class:`UndercutSingularity` where the denominator vanishes.
    """
    kp = np.asarray(pitch_curvature(params, psi))
    den = 1.0 - params.a4 * kp
    if np.any(np.abs(den) < 1e-12):
        raise UndercutSingularity(
            f"a4={params.a4} equals the pitch radius of curvature; cam curvature is infinite")
    return (kp / den)[()]


# --- feasibility ----------------------------------------------------------

def feasibility(params: DesignParams) -> FeasibilityReport:
    """Evaluate the geometric, convexity and undercut conditions."""
    p, eta, a4, b = params.p, params.eta, params.a4, params.b
    # a4 + b <= e is non-strict; allow a few ulps so a4 = e - b passes
    slack = 8 * np.finfo(float).eps * max(params.e, a4 + b)
    no_undercut = a4 < 1.0 / kappa_p_max(params) - STRICT_MARGIN
    return FeasibilityReport(
        eta_ok_lower=eta > 1 / TWO_PI,
        roller_fits_pitch=a4 / p < 0.5 - STRICT_MARGIN / p,
        roller_clears_shaft=bool(a4 + b - params.e <= slack),
        convex_pitch=eta >= ETA_CONVEX,
        no_undercut=bool(no_undercut),
    )
