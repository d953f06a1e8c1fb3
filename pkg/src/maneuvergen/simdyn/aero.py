"""Closed-form polynomial aerodynamic model for an F-16-class airframe.

Global polynomial fit in angle of attack, sideslip, body rates, and surface
deflections (all internal angles in radians).  Validity: alpha in
[-10 deg, 45 deg], |beta| <= 30 deg; evaluation outside raises
EnvelopeViolation.

Even-power sideslip terms are folded to beta*|beta| form and the control
derivatives use |beta|, which makes the lateral coefficients exactly odd
under a joint sign flip of (beta, aileron, rudder, P, R).  This mirrors the
sign(beta) treatment used by table-based models of the same airframe and is
what makes the simulator's lateral-symmetry invariant exact.
"""

import math

from ..errors import EnvelopeViolation
from .params import AircraftParams
from .types import AircraftState, SurfaceState

DEG = math.pi / 180.0
ALPHA_MIN = -10.0 * DEG
ALPHA_MAX = 45.0 * DEG
BETA_MAX = 30.0 * DEG

# Polynomial coefficients of the global fit.
_A = (-1.943367e-2, 2.136104e-1, -2.903457e-1, -3.348641e-3,
      -2.060504e-1, 6.988016e-1, -9.035381e-1)
_B = (4.833383e-1, 8.644627, 1.131098e1, -7.422961e1, 6.075776e1)
_C = (-1.145916, 6.016057e-2, 1.642479e-1)
_D = (-1.006733e-1, 8.679799e-1, 4.260586, -6.923267)
_E = (8.071648e-1, 1.189633e-1, 4.177702, -9.162236)
_F = (-1.378278e-1, -4.211369, 4.775187, -1.026225e1, 8.399763, -4.354000e-1)
_G = (-3.054956e1, -4.132305e1, 3.292788e2, -6.848038e2, 4.080244e2)
_H = (-1.05853e-1, -5.776677e-1, -1.672435e-2, 1.357256e-1,
      2.172952e-1, 3.464156, -2.835451, -1.098104)
_I = (-4.126806e-1, -1.189974e-1, 1.247721, -7.391132e-1)
_J = (6.250437e-2, 6.067723e-1, -1.101964, 9.100087, -1.192672e1)
_K = (-1.463144e-1, -4.07391e-2, 3.253159e-2, 4.851209e-1,
      2.978850e-1, -3.746393e-1, -3.213068e-1)
_L = (2.635729e-2, -2.192910e-2, -3.152901e-3, -5.817803e-2,
      4.516159e-1, -4.928702e-1, -1.579864e-2)
_M = (-2.029370e-2, 4.660702e-2, -6.012308e-1, -8.062977e-2,
      8.320429e-2, 5.018538e-1, 6.378864e-1, 4.226356e-1)
_N = (-5.19153, -3.554716, -3.598636e1, 2.247355e2, -4.120991e2, 2.411750e2)
_O = (2.993363e-1, 6.594004e-2, -2.003125e-1, -6.233977e-2,
      -2.107885, 2.141420, 8.476901e-1)
_P = (2.677652e-2, -3.298246e-1, 1.926178e-1, 4.013325, -4.404302)
_Q = (-3.698756e-1, -1.167551e-1, -7.641297e-1)
_R = (-3.348717e-2, 4.276655e-2, 6.573646e-3, 3.535831e-1, -1.373308,
      1.237582, 2.302543e-1, -2.512876e-1, 1.588105e-1, -5.199526e-1)
_S = (-8.115894e-2, -1.156580e-2, 2.514167e-2, 2.038748e-1,
      -3.337476e-1, 1.004297e-1)


def check_envelope(alpha, beta):
    if not (ALPHA_MIN <= alpha <= ALPHA_MAX) or abs(beta) > BETA_MAX:
        raise EnvelopeViolation(
            f"alpha={alpha / DEG:.2f} deg, beta={beta / DEG:.2f} deg outside "
            f"model validity (alpha in [-10, 45] deg, |beta| <= 30 deg)"
        )


def _clda(al, ba):
    # ba = |beta|
    return (_K[0] + _K[1] * al + _K[2] * ba + _K[3] * al * al
            + _K[4] * al * ba + _K[5] * al * al * ba + _K[6] * al ** 3)


def _cldr(al, ba):
    return (_L[0] + _L[1] * al + _L[2] * ba + _L[3] * al * ba
            + _L[4] * al * al * ba + _L[5] * al ** 3 * ba + _L[6] * ba * ba)


def _cnda(al, ba):
    return (_R[0] + _R[1] * al + _R[2] * ba + _R[3] * al * ba
            + _R[4] * al * al * ba + _R[5] * al ** 3 * ba
            + _R[6] * al * al + _R[7] * al ** 3
            + _R[8] * ba ** 3 + _R[9] * al * ba ** 3)


def _cndr(al, ba):
    return (_S[0] + _S[1] * al + _S[2] * ba + _S[3] * al * ba
            + _S[4] * al * al * ba + _S[5] * al * al)


def _cm_de_slope(al, de):
    # partial of the pitching-moment polynomial wrt elevator (rad^-1)
    return (_M[2] + _M[3] * al + 2.0 * _M[4] * de
            + _M[5] * al * al + 3.0 * _M[6] * de * de + 2.0 * _M[7] * al * de)


def coefficients(al, be, de, da, dr, p, q, r, vt, params: AircraftParams):
    """Six body-axis coefficients (CX, CY, CZ, Cl, Cm, Cn).

    All angles/deflections in radians, rates in rad/s, vt in ft/s.
    """
    check_envelope(al, be)

    b = params.wing_span
    cbar = params.chord
    tvt = 0.5 / vt
    phat = p * b * tvt
    qhat = q * cbar * tvt
    rhat = r * b * tvt
    ba = abs(be)
    bsym = be * ba  # odd replacement for beta^2

    al2 = al * al
    al3 = al2 * al
    al4 = al3 * al

    cx0 = (_A[0] + _A[1] * al + _A[2] * de * de + _A[3] * de
           + _A[4] * al * de + _A[5] * al2 + _A[6] * al3)
    cxq = _B[0] + _B[1] * al + _B[2] * al2 + _B[3] * al3 + _B[4] * al4
    cy0 = _C[0] * be + _C[1] * da + _C[2] * dr
    cyp = _D[0] + _D[1] * al + _D[2] * al2 + _D[3] * al3
    cyr = _E[0] + _E[1] * al + _E[2] * al2 + _E[3] * al3
    cz0 = ((_F[0] + _F[1] * al + _F[2] * al2 + _F[3] * al3 + _F[4] * al4)
           * (1.0 - be * be) + _F[5] * de)
    czq = _G[0] + _G[1] * al + _G[2] * al2 + _G[3] * al3 + _G[4] * al4
    cl0 = (_H[0] * be + _H[1] * al * be + _H[2] * al2 * be
           + _H[3] * bsym + _H[4] * al * bsym
           + _H[5] * al3 * be + _H[6] * al4 * be + _H[7] * al2 * bsym)
    clp = _I[0] + _I[1] * al + _I[2] * al2 + _I[3] * al3
    clr = _J[0] + _J[1] * al + _J[2] * al2 + _J[3] * al3 + _J[4] * al4
    cm0 = (_M[0] + _M[1] * al + _M[2] * de + _M[3] * al * de
           + _M[4] * de * de + _M[5] * al2 * de + _M[6] * de ** 3
           + _M[7] * al * de * de)
    cmq = _N[0] + _N[1] * al + _N[2] * al2 + _N[3] * al3 + _N[4] * al4 + _N[5] * al ** 5
    cn0 = (_O[0] * be + _O[1] * al * be + _O[2] * bsym + _O[3] * al * bsym
           + _O[4] * al2 * be + _O[5] * al2 * bsym + _O[6] * al3 * be)
    cnp = _P[0] + _P[1] * al + _P[2] * al2 + _P[3] * al3 + _P[4] * al4
    cnr = _Q[0] + _Q[1] * al + _Q[2] * al2

    cx = cx0 + cxq * qhat
    cy = cy0 + cyp * phat + cyr * rhat
    cz = cz0 + czq * qhat
    cl = cl0 + clp * phat + clr * rhat + _clda(al, ba) * da + _cldr(al, ba) * dr
    dxcg = params.xcg_ref - params.xcg
    cm = cm0 + cmq * qhat + cz * dxcg
    cn = (cn0 + cnp * phat + cnr * rhat + _cnda(al, ba) * da + _cndr(al, ba) * dr
          - cy * dxcg * cbar / b)

    s = params.aero_scale
    return (cx * s, cy * s, cz * s, cl * s, cm * s, cn * s)


def moment_control_jacobian(al, be, de, params: AircraftParams):
    """3x3 partials of (Cl, Cm, Cn) wrt (elevator, aileron, rudder) in rad^-1.

    Analytic; used by the dynamic-inversion controller.
    """
    check_envelope(al, be)
    ba = abs(be)
    dxcg = params.xcg_ref - params.xcg
    cb = params.chord / params.wing_span
    s = params.aero_scale
    dcl_dde = 0.0
    dcl_dda = _clda(al, ba)
    dcl_ddr = _cldr(al, ba)
    dcm_dde = _cm_de_slope(al, de) + _F[5] * dxcg
    dcn_dda = _cnda(al, ba) - _C[1] * dxcg * cb
    dcn_ddr = _cndr(al, ba) - _C[2] * dxcg * cb
    return (
        (dcl_dde * s, dcl_dda * s, dcl_ddr * s),
        (dcm_dde * s, 0.0, 0.0),
        (0.0, dcn_dda * s, dcn_ddr * s),
    )


def aero_coefficients(state: AircraftState, surfaces: SurfaceState,
                      params: AircraftParams):
    """Public wrapper over the coefficient model (surfaces in degrees)."""
    return coefficients(
        state.alpha, state.beta,
        surfaces.dEle * DEG, surfaces.dAil * DEG, surfaces.dRud * DEG,
        state.P, state.Q, state.R, state.Vt, params,
    )
