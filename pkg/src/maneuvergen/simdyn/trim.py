"""Straight, level, wings-level trim via damped Newton iteration.

Unknowns are (alpha, elevator, throttle); with beta = 0, zero rates, and
theta = alpha (level flight) the lateral residuals vanish identically by
symmetry, leaving a square 3x3 system in (Vt_dot, alpha_dot, Q_dot).  The
reported residual is the full 7-component dynamic residual norm.
"""

import math

from ..errors import EnvelopeViolation, TrimNotFound
from .aero import DEG
from .engine import power_command
from .eom import _derivative
from .params import AircraftParams
from .types import AircraftState, ControlInput

MAX_ITER = 60
TOL = 1e-10


def _trim_state_tuple(vt, alt, alpha, throttle):
    return (vt, alpha, 0.0, 0.0, alpha, 0.0,
            0.0, 0.0, 0.0, 0.0, 0.0, -alt, power_command(throttle))


def _residual3(vt, alt, alpha, de, dT, params):
    x = _trim_state_tuple(vt, alt, alpha, dT)
    d = _derivative(x, (dT, de, 0.0, 0.0), params)
    return (d[0], d[1], d[7])  # Vt_dot, alpha_dot, Q_dot


def residual_norm(state: AircraftState, control: ControlInput,
                  params: AircraftParams) -> float:
    """Norm of (Vt_dot, alpha_dot, beta_dot, P_dot, Q_dot, R_dot, theta_dot)."""
    surf = (control.dT, control.dEle, control.dAil, control.dRud)
    d = _derivative(state.as_tuple(), surf, params)
    comps = (d[0], d[1], d[2], d[6], d[7], d[8], d[4])
    return math.sqrt(sum(c * c for c in comps))


def trim(vt: float, alt: float, params: AircraftParams):
    """Solve for level trim at (vt ft/s, alt ft).

    Returns (AircraftState, ControlInput); raises TrimNotFound if the
    damped Newton iteration exhausts its budget or lands outside the
    actuator limits.
    """
    # gliding initial guess
    alpha, de, dT = 2.0 * DEG, 0.0, 0.3

    def norm2(r):
        return r[0] * r[0] + r[1] * r[1] + r[2] * r[2]

    try:
        r = _residual3(vt, alt, alpha, de, dT, params)
    except EnvelopeViolation as exc:
        raise TrimNotFound(f"initial guess outside envelope: {exc}") from exc

    for _ in range(MAX_ITER):
        if math.sqrt(norm2(r)) < TOL:
            break
        # numerical Jacobian, central differences
        h = (1e-6, 1e-5, 1e-6)  # alpha rad, elevator deg, throttle
        cols = []
        try:
            for j, hj in enumerate(h):
                args = [alpha, de, dT]
                args[j] += hj
                rp = _residual3(vt, alt, *args, params)
                args[j] -= 2.0 * hj
                rm = _residual3(vt, alt, *args, params)
                cols.append(tuple((a - b) / (2.0 * hj) for a, b in zip(rp, rm)))
        except EnvelopeViolation as exc:
            raise TrimNotFound(f"iterate left the envelope: {exc}") from exc

        # solve J * dx = -r for the 3x3 Jacobian (columns in cols)
        j11, j21, j31 = cols[0]
        j12, j22, j32 = cols[1]
        j13, j23, j33 = cols[2]
        det = (j11 * (j22 * j33 - j23 * j32)
               - j12 * (j21 * j33 - j23 * j31)
               + j13 * (j21 * j32 - j22 * j31))
        if det == 0.0 or not math.isfinite(det):
            raise TrimNotFound("singular trim Jacobian")
        b0, b1, b2 = -r[0], -r[1], -r[2]
        dx0 = (b0 * (j22 * j33 - j23 * j32)
               - j12 * (b1 * j33 - j23 * b2)
               + j13 * (b1 * j32 - j22 * b2)) / det
        dx1 = (j11 * (b1 * j33 - j23 * b2)
               - b0 * (j21 * j33 - j23 * j31)
               + j13 * (j21 * b2 - b1 * j31)) / det
        dx2 = (j11 * (j22 * b2 - b1 * j32)
               - j12 * (j21 * b2 - b1 * j31)
               + b0 * (j21 * j32 - j22 * j31)) / det

        # damped line search on the squared residual norm
        lam = 1.0
        base = norm2(r)
        for _ls in range(30):
            na, nd, nt = alpha + lam * dx0, de + lam * dx1, dT + lam * dx2
            try:
                rn = _residual3(vt, alt, na, nd, nt, params)
                if norm2(rn) < base:
                    alpha, de, dT, r = na, nd, nt, rn
                    break
            except EnvelopeViolation:
                pass
            lam *= 0.5
        else:
            raise TrimNotFound("line search stalled")
    else:
        raise TrimNotFound(
            f"no convergence in {MAX_ITER} iterations at vt={vt}, alt={alt}")

    control = ControlInput(dT, de, 0.0, 0.0)
    if not control.within_limits():
        raise TrimNotFound(
            f"trim control outside actuator limits: {control}")
    state = AircraftState(*_trim_state_tuple(vt, alt, alpha, dT))
    state.validate()
    if residual_norm(state, control, params) >= 1e-8:
        raise TrimNotFound("converged point fails the residual contract")
    return state, control
