"""Closed-form synthesis of the Slide-O-Cam profile.

The follower moves by one pitch ``p`` per cam turn with the linear law
``s(psi) = p*psi/(2*pi) - p/2``.  The roller centre sits at ``(e, s)`` in
the machine frame, ``e = eta*p``; rotating that point into the cam frame
gives the pitch curve, and offsetting it by the roller radius ``a4`` along
the line of action gives the cam profile.

All angles are radians, all lengths millimetres.  Functions taking ``psi``
accept scalars or numpy arrays.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameters, NoRoot

TWO_PI = 2.0 * math.pi

# Directed angle between the cam axis and the follower direction.
ALPHA1 = -math.pi / 2

# |2*pi*eta - 1| below this is treated as the forbidden value eta = 1/(2*pi).
ETA_SINGULAR_TOL = 1e-6

# Bracket and tolerance for the extended-angle search.
DELTA_BRACKET = (-math.pi + 1e-6, -1e-12)
DELTA_XTOL = 1e-13
_DELTA_SCAN = 257


@dataclass(frozen=True)
class DesignParams:
    """Geometric design point.

    ``p`` pitch, ``eta`` offset ratio e/p, ``a4`` roller radius, ``b`` camshaft
    radius.  Only type invariants are checked here; geometric feasibility is
    :func:`slideocam.kinematics.feasibility`.
    """

    p: float
    eta: float
    a4: float
    b: float = 9.5

    def __post_init__(self):
        for name in ("p", "eta", "a4", "b"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParameters(f"{name} must be finite, got {value!r}")
        if self.p <= 0:
            raise InvalidParameters(f"pitch p must be positive, got {self.p}")
        if self.a4 <= 0:
            raise InvalidParameters(f"roller radius a4 must be positive, got {self.a4}")
        if self.b < 0:
            raise InvalidParameters(f"shaft radius b must be non-negative, got {self.b}")
        if abs(TWO_PI * self.eta - 1.0) < ETA_SINGULAR_TOL:
            raise InvalidParameters(
                f"eta={self.eta} is the singular value 1/(2*pi): the coefficient "
                "delta = arctan((psi - pi)/(2*pi*eta - 1)) is undefined"
            )

    @property
    def e(self) -> float:
        """Offset between the cam axis and the line of roller centres."""
        return self.eta * self.p

    @property
    def c(self) -> float:
        """The recurring factor ``2*pi*eta - 1``."""
        return TWO_PI * self.eta - 1.0

    def replace(self, **changes) -> "DesignParams":
        values = {"p": self.p, "eta": self.eta, "a4": self.a4, "b": self.b}
        values.update(changes)
        return DesignParams(**values)


class CurveKind(enum.Enum):
    CAM_PROFILE = "cam"
    PITCH_CURVE = "pitch"


@dataclass(frozen=True)
class Coefficients:
    b2: float | np.ndarray
    b3: float | np.ndarray
    delta: float | np.ndarray


@dataclass(frozen=True, eq=False)
class ProfileCurve:
    """Sampled planar curve in the cam frame."""

    kind: CurveKind
    psi: np.ndarray
    u: np.ndarray
    v: np.ndarray
    params: DesignParams | None = field(default=None, compare=False)

    def __post_init__(self):
        psi = np.asarray(self.psi, dtype=float)
        u = np.asarray(self.u, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if not (psi.ndim == u.ndim == v.ndim == 1 and psi.shape == u.shape == v.shape):
            raise InvalidParameters("psi, u and v must be 1-D arrays of equal length")
        if psi.size > 1 and not np.all(np.diff(psi) > 0):
            raise InvalidParameters("psi samples must be strictly increasing")
        for name, arr in (("psi", psi), ("u", u), ("v", v)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self):
        return self.psi.size

    @property
    def points(self) -> np.ndarray:
        """(n, 2) array of (u, v)."""
        return np.column_stack([self.u, self.v])


def displacement_s(params: DesignParams, psi):
    """Follower displacement, linear in the cam angle."""
    return params.p / TWO_PI * np.asarray(psi, dtype=float)[()] - params.p / 2


def displacement_ds(params: DesignParams) -> float:
    """First derivative of :func:`displacement_s`; the second derivative is 0."""
    return params.p / TWO_PI


def coefficients(params: DesignParams, psi) -> Coefficients:
    """``b2``, ``b3`` and ``delta`` of the contact-point expression.

    ``delta`` uses the single-argument arctangent, so it lies in
    (-pi/2, pi/2); for feasible designs (2*pi*eta > 1) it has the sign of
    ``psi - pi``.
    """
    x = np.asarray(psi, dtype=float)[()] - math.pi
    b2 = params.p / TWO_PI
    b3 = b2 * np.hypot(params.c, x)
    delta = np.arctan(x / params.c)
    return Coefficients(b2=b2, b3=b3, delta=delta)


def cam_profile_point(params: DesignParams, psi):
    """Contact point ``(u_c, v_c)`` on the cam profile."""
    psi = np.asarray(psi, dtype=float)[()]
    co = coefficients(params, psi)
    r = co.b3 - params.a4
    u = co.b2 * np.cos(psi) + r * np.cos(co.delta - psi)
    v = -co.b2 * np.sin(psi) + r * np.sin(co.delta - psi)
    return u, v


def pitch_curve_point(params: DesignParams, psi):
    """Roller centre ``(u_p, v_p)`` expressed in the cam frame."""
    psi = np.asarray(psi, dtype=float)[()]
    s = displacement_s(params, psi)
    e = params.e
    u = e * np.cos(psi) + s * np.sin(psi)
    v = -e * np.sin(psi) + s * np.cos(psi)
    return u, v


def _bisect(f, lo, hi, flo, xtol):
    # flo = f(lo); caller guarantees a sign change on [lo, hi]
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def extended_angle(params: DesignParams) -> float:
    """Extended angle Delta: the root of ``v_c(psi) = 0`` in (-pi, 0) nearest zero.

    A coarse scan locates the sign change closest to zero, then bisection
    refines it to ``DELTA_XTOL``.  Raises :class:`NoRoot` when ``v_c`` keeps
    one sign over the whole bracket.
    """

    b2 = params.p / TWO_PI
    c = params.c

    def vc(psi):
        x = psi - math.pi
        return -b2 * math.sin(psi) + (b2 * math.hypot(c, x) - params.a4) * math.sin(
            math.atan(x / c) - psi)

    lo, hi = DELTA_BRACKET
    grid = np.linspace(lo, hi, _DELTA_SCAN)
    values = cam_profile_point(params, grid)[1]
    if values[-1] == 0.0:
        return float(grid[-1])
    sign = np.sign(values)
    crossings = np.nonzero(sign[:-1] * sign[1:] <= 0)[0]
    if crossings.size == 0:
        raise NoRoot(
            f"v_c does not change sign on ({lo:.6f}, {hi:.1e}) for {params}; "
            "the profile cannot close"
        )
    i = crossings[-1]
    return _bisect(vc, float(grid[i]), float(grid[i + 1]), float(values[i]), DELTA_XTOL)


def sample_profile(params: DesignParams, kind: CurveKind = CurveKind.CAM_PROFILE,
                   n_samples: int = 1024) -> ProfileCurve:
    """Sample a curve on a uniform grid, endpoints included.

    The cam profile spans ``[Delta, 2*pi - Delta]``; the pitch curve ``[0, 2*pi]``.
    """
    kind = CurveKind(kind)
    if n_samples < 16:
        raise InvalidParameters(f"n_samples must be at least 16, got {n_samples}")
    if kind is CurveKind.CAM_PROFILE:
        delta = extended_angle(params)
        psi = np.linspace(delta, TWO_PI - delta, n_samples)
        u, v = cam_profile_point(params, psi)
    else:
        psi = np.linspace(0.0, TWO_PI, n_samples)
        u, v = pitch_curve_point(params, psi)
    return ProfileCurve(kind=kind, psi=psi, u=u, v=v, params=params)
