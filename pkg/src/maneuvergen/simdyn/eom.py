"""Flat-earth 6-DOF equations of motion and the fixed-step integrator.

Wind-angle force equations (Vt, alpha, beta), Euler kinematics, body-axis
moment equations with a full inertia tensor (Ixz cross product), flat-earth
navigation, and the first-order engine power lag.  Surfaces are held
constant across one RK4 step (zero-order hold behind the actuator model).
"""

import math

from ..errors import NumericalDivergence
from .aero import DEG, coefficients
from .atmosphere import dynamic_pressure
from .engine import power_rate, thrust
from .actuators import clamp_and_rate_limit
from .params import AircraftParams
from .types import AircraftState, ControlInput, SurfaceState

MAX_RATE = 20.0       # rad/s sanity bound
MAX_SPEED = 3000.0    # ft/s sanity bound
_HALF_PI = math.pi / 2.0


def _derivative(x, surf, params: AircraftParams):
    """Time derivative of the 13-component state tuple."""
    vt, al, be, phi, theta, psi, p, q, r, pn, pe, pd, power = x
    dT, de_deg, da_deg, dr_deg = surf

    alt = -pd
    cx, cy, cz, cl, cm, cn = coefficients(
        al, be, de_deg * DEG, da_deg * DEG, dr_deg * DEG,
        p, q, r, vt, params)

    qbar = dynamic_pressure(vt, alt)
    qs = qbar * params.wing_area
    b = params.wing_span
    cbar = params.chord
    g = params.gravity
    mass = params.mass
    T = thrust(power, vt, alt, params)

    cbta = math.cos(be)
    u = vt * math.cos(al) * cbta
    v = vt * math.sin(be)
    w = vt * math.sin(al) * cbta
    sth, cth = math.sin(theta), math.cos(theta)
    sph, cph = math.sin(phi), math.cos(phi)
    sps, cps = math.sin(psi), math.cos(psi)

    # body-axis accelerations from aero + thrust + gravity
    ax = (qs * cx + T) / mass
    ay = qs * cy / mass
    az = qs * cz / mass
    udot = r * v - q * w - g * sth + ax
    vdot = p * w - r * u + g * cth * sph + ay
    wdot = q * u - p * v + g * cth * cph + az

    dum = u * u + w * w
    vt_dot = (u * udot + v * vdot + w * wdot) / vt
    alpha_dot = (u * wdot - w * udot) / dum
    beta_dot = (vt * vdot - v * vt_dot) * cbta / dum

    # Euler kinematics
    phi_dot = p + (sth / cth) * (q * sph + r * cph)
    theta_dot = q * cph - r * sph
    psi_dot = (q * sph + r * cph) / cth

    # moments (engine angular momentum he couples via gyroscopic terms)
    he = params.engine_momentum
    L = qs * b * cl
    M = qs * cbar * cm - r * he
    N = qs * b * cn + q * he
    Ixx, Iyy, Izz, Ixz = params.Ixx, params.Iyy, params.Izz, params.Ixz
    gam = Ixx * Izz - Ixz * Ixz
    xpq = Ixz * (Ixx - Iyy + Izz)
    xqr = Izz * (Izz - Iyy) + Ixz * Ixz
    zpq = (Ixx - Iyy) * Ixx + Ixz * Ixz
    p_dot = (xpq * p * q - xqr * q * r + Izz * L + Ixz * N) / gam
    q_dot = ((Izz - Ixx) * p * r - Ixz * (p * p - r * r) + M) / Iyy
    r_dot = (zpq * p * q - xpq * q * r + Ixz * L + Ixx * N) / gam

    # navigation (NED, pd positive down)
    t1 = sph * cps
    t2 = cph * sth
    t3 = sph * sps
    s1 = cth * cps
    s2 = cth * sps
    s3 = t1 * sth - cph * sps
    s4 = t3 * sth + cph * cps
    s5 = sph * cth
    s6 = t2 * cps + t3
    s7 = t2 * sps - t1
    s8 = cph * cth
    pn_dot = u * s1 + v * s3 + w * s6
    pe_dot = u * s2 + v * s4 + w * s7
    pd_dot = -(u * sth - v * s5 - w * s8)

    pow_dot = power_rate(power, dT, params)

    return (vt_dot, alpha_dot, beta_dot, phi_dot, theta_dot, psi_dot,
            p_dot, q_dot, r_dot, pn_dot, pe_dot, pd_dot, pow_dot)


def state_derivative(state: AircraftState, surfaces: SurfaceState,
                     params: AircraftParams) -> AircraftState:
    """Derivative of every state component, packaged as an AircraftState."""
    d = _derivative(state.as_tuple(), surfaces.as_tuple(), params)
    return AircraftState(*d)


def _check_sane(x):
    vt, al, be, phi, theta, psi, p, q, r = x[:9]
    if not all(math.isfinite(v) for v in x):
        raise NumericalDivergence("non-finite state after step")
    if vt <= 0.0 or vt > MAX_SPEED:
        raise NumericalDivergence(f"airspeed {vt:.1f} ft/s outside (0, {MAX_SPEED}]")
    if abs(p) > MAX_RATE or abs(q) > MAX_RATE or abs(r) > MAX_RATE:
        raise NumericalDivergence("body rate beyond 20 rad/s sanity bound")
    if abs(theta) >= _HALF_PI:
        raise NumericalDivergence("pitch reached the gimbal singularity")


def step(state: AircraftState, command: ControlInput, surfaces: SurfaceState,
         params: AircraftParams, dt: float):
    """One fixed step: actuator update, then one RK4 state step.

    Returns (next_state, next_surfaces).  Deterministic: equal inputs give
    bit-identical outputs.
    """
    if not 0.0 < dt <= 0.05:
        raise ValueError(f"dt={dt} outside (0, 0.05]")
    nsurf = clamp_and_rate_limit(command, surfaces, params, dt)
    sv = nsurf.as_tuple()

    x0 = state.as_tuple()
    k1 = _derivative(x0, sv, params)
    h2 = 0.5 * dt
    x1 = tuple(a + h2 * b for a, b in zip(x0, k1))
    k2 = _derivative(x1, sv, params)
    x2 = tuple(a + h2 * b for a, b in zip(x0, k2))
    k3 = _derivative(x2, sv, params)
    x3 = tuple(a + dt * b for a, b in zip(x0, k3))
    k4 = _derivative(x3, sv, params)
    h6 = dt / 6.0
    xn = tuple(a + h6 * (b + 2.0 * c + 2.0 * d + e)
               for a, b, c, d, e in zip(x0, k1, k2, k3, k4))
    _check_sane(xn)
    return AircraftState(*xn), nsurf
