"""Simulator value types.

Conventions: US customary units (ft, slug, lb), body-axis rates in rad/s,
Euler angles in rad, control surface deflections in degrees, throttle as a
0..1 fraction.  Position is tangent-plane (north, east, down); ``pd`` is
positive down so altitude = -pd.
"""

import math
from dataclasses import dataclass

HALF_PI = math.pi / 2.0

# Eq.-level actuator magnitude limits (deg; throttle is a fraction).
THROTTLE_MIN, THROTTLE_MAX = 0.0, 1.0
ELEVATOR_LIMIT_DEG = 25.0
AILERON_LIMIT_DEG = 21.5
RUDDER_LIMIT_DEG = 30.0


@dataclass(frozen=True, slots=True)
class AircraftState:
    """12 rigid-body states plus the engine power lag state.

    Vt    airspeed, ft/s (> 0)
    alpha angle of attack, rad
    beta  sideslip, rad
    phi, theta, psi  Euler roll/pitch/yaw, rad; theta in (-pi/2, pi/2)
    P, Q, R  body angular rates, rad/s
    pn, pe, pd  tangent-plane position, ft (pd positive down)
    pow   engine power lag state, percent 0..100
    """

    Vt: float
    alpha: float
    beta: float
    phi: float
    theta: float
    psi: float
    P: float
    Q: float
    R: float
    pn: float
    pe: float
    pd: float
    pow: float = 0.0

    def validate(self):
        vals = self.as_tuple()
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"non-finite state component: {self}")
        if self.Vt <= 0.0:
            raise ValueError(f"airspeed must be positive, got {self.Vt}")
        if not -HALF_PI < self.theta < HALF_PI:
            raise ValueError(
                f"pitch {self.theta} rad outside (-pi/2, pi/2) gimbal-safe range"
            )
        return self

    def as_tuple(self):
        return (
            self.Vt, self.alpha, self.beta,
            self.phi, self.theta, self.psi,
            self.P, self.Q, self.R,
            self.pn, self.pe, self.pd,
            self.pow,
        )

    @classmethod
    def from_tuple(cls, t):
        return cls(*t)

    @property
    def altitude(self):
        return -self.pd


@dataclass(frozen=True, slots=True)
class ControlInput:
    """Commanded throttle fraction and surface deflections (deg)."""

    dT: float
    dEle: float
    dAil: float
    dRud: float

    def clipped(self):
        return ControlInput(
            min(max(self.dT, THROTTLE_MIN), THROTTLE_MAX),
            min(max(self.dEle, -ELEVATOR_LIMIT_DEG), ELEVATOR_LIMIT_DEG),
            min(max(self.dAil, -AILERON_LIMIT_DEG), AILERON_LIMIT_DEG),
            min(max(self.dRud, -RUDDER_LIMIT_DEG), RUDDER_LIMIT_DEG),
        )

    def within_limits(self, tol=0.0):
        return (
            THROTTLE_MIN - tol <= self.dT <= THROTTLE_MAX + tol
            and abs(self.dEle) <= ELEVATOR_LIMIT_DEG + tol
            and abs(self.dAil) <= AILERON_LIMIT_DEG + tol
            and abs(self.dRud) <= RUDDER_LIMIT_DEG + tol
        )

    def as_tuple(self):
        return (self.dT, self.dEle, self.dAil, self.dRud)


@dataclass(frozen=True, slots=True)
class SurfaceState:
    """Actual actuator positions after lag and rate limiting (same channels
    and bounds as ControlInput)."""

    dT: float
    dEle: float
    dAil: float
    dRud: float

    def as_tuple(self):
        return (self.dT, self.dEle, self.dAil, self.dRud)

    def within_limits(self, tol=0.0):
        return ControlInput(*self.as_tuple()).within_limits(tol)

    @classmethod
    def from_command(cls, cmd: ControlInput):
        c = cmd.clipped()
        return cls(c.dT, c.dEle, c.dAil, c.dRud)
