"""Nonlinear dynamic inversion of the body-rate dynamics.

Desired angular accelerations nu = ref_dot + K o (ref - omega) are converted
to required aerodynamic moments through the full inertia tensor, then to
surface deflections by inverting the analytic control-effectiveness
Jacobian about the current surface positions.  Throttle holds airspeed with
a proportional correction around the trim setting.
"""

import math
from dataclasses import dataclass

from ..errors import InversionSingular
from ..simdyn.aero import DEG, coefficients, moment_control_jacobian
from ..simdyn.atmosphere import dynamic_pressure
from ..simdyn.params import AircraftParams
from ..simdyn.types import AircraftState, ControlInput, SurfaceState


@dataclass(frozen=True)
class NdiGains:
    """Rate-loop bandwidths (1/s) and the airspeed-hold throttle gain."""

    kp: float = 8.0
    kq: float = 8.0
    kr: float = 8.0
    kv_throttle: float = 0.004   # throttle fraction per ft/s airspeed error
    cond_limit: float = 1.0e6    # 1-norm condition bound on the inversion

    def validate(self):
        if min(self.kp, self.kq, self.kr) <= 0.0 or self.kv_throttle <= 0.0:
            raise ValueError("NDI gains must be positive")
        return self


def _solve3(B, rhs, cond_limit):
    (a, b, c), (d, e, f), (g, h, i) = B
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0.0 or not math.isfinite(det):
        raise InversionSingular("control-effectiveness matrix is singular")
    inv = (
        ((e * i - f * h) / det, (c * h - b * i) / det, (b * f - c * e) / det),
        ((f * g - d * i) / det, (a * i - c * g) / det, (c * d - a * f) / det),
        ((d * h - e * g) / det, (b * g - a * h) / det, (a * e - b * d) / det),
    )
    norm_b = max(abs(a) + abs(d) + abs(g), abs(b) + abs(e) + abs(h),
                 abs(c) + abs(f) + abs(i))
    norm_i = max(sum(abs(row[j]) for row in inv) for j in range(3))
    if norm_b * norm_i > cond_limit:
        raise InversionSingular(
            f"inversion condition {norm_b * norm_i:.3e} exceeds {cond_limit:.1e}")
    x0 = inv[0][0] * rhs[0] + inv[0][1] * rhs[1] + inv[0][2] * rhs[2]
    x1 = inv[1][0] * rhs[0] + inv[1][1] * rhs[1] + inv[1][2] * rhs[2]
    x2 = inv[2][0] * rhs[0] + inv[2][1] * rhs[1] + inv[2][2] * rhs[2]
    return x0, x1, x2


def ndi_action(state: AircraftState, pqr_ref, gains: NdiGains,
               params: AircraftParams, trim_throttle: float,
               surfaces: SurfaceState | None = None,
               ref_dot=(0.0, 0.0, 0.0), vt_ref: float | None = None) -> ControlInput:
    """Surface commands that drive body rates toward pqr_ref.

    ``surfaces`` is the linearization point for the moment inversion
    (defaults to zero deflections); ``ref_dot`` feeds the reference rate
    derivative forward; ``vt_ref`` enables the airspeed-hold throttle term.
    """
    p, q, r = state.P, state.Q, state.R
    pd_ref, qd_ref, rd_ref = pqr_ref
    nu_p = ref_dot[0] + gains.kp * (pd_ref - p)
    nu_q = ref_dot[1] + gains.kq * (qd_ref - q)
    nu_r = ref_dot[2] + gains.kr * (rd_ref - r)

    Ixx, Iyy, Izz, Ixz = params.Ixx, params.Iyy, params.Izz, params.Ixz
    gam = Ixx * Izz - Ixz * Ixz
    xpq = Ixz * (Ixx - Iyy + Izz)
    xqr = Izz * (Izz - Iyy) + Ixz * Ixz
    zpq = (Ixx - Iyy) * Ixx + Ixz * Ixz

    # invert the moment equations for required (L, M, N)
    rhs_p = gam * nu_p - xpq * p * q + xqr * q * r
    rhs_r = gam * nu_r - zpq * p * q + xpq * q * r
    L_req = (Ixx * rhs_p - Ixz * rhs_r) / gam
    N_req = (Izz * rhs_r - Ixz * rhs_p) / gam
    M_req = Iyy * nu_q - (Izz - Ixx) * p * r + Ixz * (p * p - r * r)

    if surfaces is None:
        surfaces = SurfaceState(trim_throttle, 0.0, 0.0, 0.0)
    de0, da0, dr0 = surfaces.dEle, surfaces.dAil, surfaces.dRud

    alt = state.altitude
    qbar = dynamic_pressure(state.Vt, alt)
    qs = qbar * params.wing_area
    if qs <= 1e-9:
        raise InversionSingular("dynamic pressure too low to invert")
    b, cbar = params.wing_span, params.chord
    he = params.engine_momentum

    cl_req = L_req / (qs * b)
    cm_req = (M_req + r * he) / (qs * cbar)
    cn_req = (N_req - q * he) / (qs * b)

    cl_cur, cm_cur, cn_cur = coefficients(
        state.alpha, state.beta, de0 * DEG, da0 * DEG, dr0 * DEG,
        p, q, r, state.Vt, params)[3:]

    B = moment_control_jacobian(state.alpha, state.beta, de0 * DEG, params)
    dde, dda, ddr = _solve3(
        B, (cl_req - cl_cur, cm_req - cm_cur, cn_req - cn_cur),
        gains.cond_limit)

    if vt_ref is None:
        throttle = trim_throttle
    else:
        throttle = trim_throttle + gains.kv_throttle * (vt_ref - state.Vt)

    return ControlInput(
        throttle,
        de0 + dde / DEG,
        da0 + dda / DEG,
        dr0 + ddr / DEG,
    ).clipped()
