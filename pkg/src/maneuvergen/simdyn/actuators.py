"""Discrete actuator dynamics: first-order lag, rate limit, magnitude clamp."""

import math

from .params import AircraftParams
from .types import (
    AILERON_LIMIT_DEG,
    ELEVATOR_LIMIT_DEG,
    RUDDER_LIMIT_DEG,
    THROTTLE_MAX,
    THROTTLE_MIN,
    ControlInput,
    SurfaceState,
)


def _advance(pos, cmd, tau, rate, dt, lo, hi):
    # exact discretization of the first-order lag over one step
    if tau > 0.0:
        move = (1.0 - math.exp(-dt / tau)) * (cmd - pos)
    else:
        move = cmd - pos
    max_move = rate * dt
    if move > max_move:
        move = max_move
    elif move < -max_move:
        move = -max_move
    out = pos + move
    if out > hi:
        return hi
    if out < lo:
        return lo
    return out


def clamp_and_rate_limit(command: ControlInput, surfaces: SurfaceState,
                         params: AircraftParams, dt: float) -> SurfaceState:
    """Advance actual surface positions one step toward the command."""
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    return SurfaceState(
        _advance(surfaces.dT, command.dT, params.throttle_tau_s,
                 params.throttle_rate_ps, dt, THROTTLE_MIN, THROTTLE_MAX),
        _advance(surfaces.dEle, command.dEle, params.surface_tau_s,
                 params.surface_rate_dps, dt, -ELEVATOR_LIMIT_DEG, ELEVATOR_LIMIT_DEG),
        _advance(surfaces.dAil, command.dAil, params.surface_tau_s,
                 params.surface_rate_dps, dt, -AILERON_LIMIT_DEG, AILERON_LIMIT_DEG),
        _advance(surfaces.dRud, command.dRud, params.surface_tau_s,
                 params.surface_rate_dps, dt, -RUDDER_LIMIT_DEG, RUDDER_LIMIT_DEG),
    )
