"""Force transmission and roller-pin deflection.

The pin carrying each roller bearing is treated as a cantilever of free
length ``L`` and radius ``a5`` loaded at its tip.  Units: mm, N, MPa
(N/mm^2), N*mm for torque.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegeneratePin, InfiniteForce, InvalidParameters
from .geometry import TWO_PI, DesignParams, coefficients, extended_angle
from .kinematics import Mechanism, driving_interval

# Series-2 bearing fit: outer diameter D = 1.6*d + 10 (mm).
BEARING_SLOPE = 1.6
BEARING_OFFSET = 10.0


@dataclass(frozen=True)
class PinModel:
    """Cantilever pin.  ``a5=None`` means "derive from the roller radius"."""

    L: float = 10.0
    tau: float = 1200.0
    E: float = 2.0e5
    a5: float | None = None

    def __post_init__(self):
        for name in ("L", "tau", "E"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameters(f"{name} must be positive, got {value!r}")
        if self.a5 is not None and not (math.isfinite(self.a5) and self.a5 > 0):
            raise InvalidParameters(f"pin radius a5 must be positive, got {self.a5!r}")

    @property
    def beta(self) -> float:
        """``4 L^3 / (3 E pi)``; tip deflection is ``beta * F / a5^4``."""
        return 4 * self.L**3 / (3 * self.E * math.pi)

    @property
    def I(self) -> float:  # noqa: E743
        return math.pi * self.pin_radius() ** 4 / 4

    def pin_radius(self, params: DesignParams | None = None) -> float:
        if self.a5 is not None:
            return self.a5
        if params is None:
            raise InvalidParameters("pin radius unknown: set a5 or pass design params")
        return bearing_pin_radius(params.a4)

    def with_a5(self, a5: float) -> "PinModel":
        return replace(self, a5=a5)


@dataclass(frozen=True)
class ForceState:
    f_y: float
    f_x: float
    F: float
    delta: float


def bearing_pin_radius(a4: float) -> float:
    """Pin radius for a roller of radius ``a4`` (``a4 = 1.6*a5 + 5``)."""
    if a4 <= BEARING_OFFSET / 2:
        raise DegeneratePin(f"a4={a4} mm leaves no pin: series-2 fit needs a4 > 5 mm")
    return (a4 - BEARING_OFFSET / 2) / BEARING_SLOPE


def bearing_roller_radius(a5: float) -> float:
    """Inverse of :func:`bearing_pin_radius`."""
    if a5 <= 0:
        raise DegeneratePin(f"pin radius must be positive, got {a5}")
    return BEARING_SLOPE * a5 + BEARING_OFFSET / 2


def vertical_force_F0(pin: PinModel, params: DesignParams) -> float:
    """Follower-direction force ``2*pi*tau/p``; constant over the cycle."""
    return TWO_PI * pin.tau / params.p


def horizontal_force(pin: PinModel, params: DesignParams, psi):
    """``F0 / tan(delta(psi))``; raises :class:`InfiniteForce` where delta = 0."""
    delta = np.asarray(coefficients(params, psi).delta)
    if np.any(delta == 0.0):
        raise InfiniteForce("delta = 0 (psi = pi): the line of action meets the camshaft axis")
    return (vertical_force_F0(pin, params) / np.tan(delta))[()]


def force_state(pin: PinModel, params: DesignParams, psi: float) -> ForceState:
    f_y = vertical_force_F0(pin, params)
    f_x = float(horizontal_force(pin, params, psi))
    delta = float(coefficients(params, psi).delta)
    return ForceState(f_y=f_y, f_x=f_x, F=math.hypot(f_x, f_y), delta=delta)


def pin_deflection(pin: PinModel, params: DesignParams, psi):
    """Tip deflection ``F L^3 / (3 E I)`` at cam angle ``psi`` (mm)."""
    a5 = pin.pin_radius(params)
    F = np.hypot(horizontal_force(pin, params, psi), vertical_force_F0(pin, params))
    return (pin.beta * F / a5**4)[()]


def max_pin_deflection(pin: PinModel, params: DesignParams, mechanism: Mechanism,
                       delta: float | None = None) -> float:
    """Worst tip deflection over the driving interval (mm).

    The transmitted force peaks where the drive starts, psi_i, giving
    ``beta*F0/a5^4 * sqrt(c^2 + (psi_i - pi)^2) / |psi_i - pi|``.
    """
    if delta is None:
        delta = extended_angle(params)
    psi_i = driving_interval(params, mechanism, delta).psi_start
    x = psi_i - math.pi
    if x == 0.0:
        raise InfiniteForce("driving interval starts at psi = pi")
    a5 = pin.pin_radius(params)
    return pin.beta * vertical_force_F0(pin, params) / a5**4 * math.hypot(params.c, x) / abs(x)
