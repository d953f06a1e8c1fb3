"""Observation vector for the adaptation agent.

Fixed ordering: the 12 rigid-body states (Vt, alpha, beta, phi, theta, psi,
P, Q, R, pn, pe, pd) followed by the current rate deltas (dP, dQ, dR).
Each feature is affinely mapped to [-1, 1] from its configured bounds and
clipped.
"""

import math
from dataclasses import dataclass, field

import numpy as np

DEG = math.pi / 180.0
OBS_DIM = 15


def _default_bounds():
    return (
        (200.0, 1500.0),            # Vt ft/s
        (-10.0 * DEG, 45.0 * DEG),  # alpha
        (-30.0 * DEG, 30.0 * DEG),  # beta
        (-math.pi, math.pi),        # phi
        (-math.pi / 2, math.pi / 2),  # theta
        (-math.pi, math.pi),        # psi
        (-5.0, 5.0),                # P rad/s
        (-5.0, 5.0),                # Q
        (-5.0, 5.0),                # R
        (-1.0e5, 1.0e5),            # pn ft
        (-1.0e5, 1.0e5),            # pe
        (-30000.0, 0.0),            # pd ft (positive down)
        (0.0, 2.0),                 # dP rad/s
        (0.0, 2.0),                 # dQ
        (0.0, 2.0),                 # dR
    )


@dataclass(frozen=True)
class ObsBounds:
    """Per-feature (min, max) used for the [-1, 1] affine map."""

    bounds: tuple = field(default_factory=_default_bounds)

    def __post_init__(self):
        if len(self.bounds) != OBS_DIM:
            raise ValueError(f"need {OBS_DIM} bound pairs")
        for lo, hi in self.bounds:
            if hi <= lo:
                raise ValueError("each bound must have max > min")
        object.__setattr__(self, "_lo", np.array([b[0] for b in self.bounds]))
        object.__setattr__(self, "_hi", np.array([b[1] for b in self.bounds]))


def observe(state, ref_sample, bounds: ObsBounds) -> np.ndarray:
    """Normalized observation, clipped to [-1, 1]."""
    st = state.as_tuple()
    pd_ref, qd_ref, rd_ref = ref_sample
    raw = np.array(st[0:12] + (abs(pd_ref - st[6]), abs(qd_ref - st[7]),
                               abs(rd_ref - st[8])))
    lo, hi = bounds._lo, bounds._hi
    return np.clip(2.0 * (raw - lo) / (hi - lo) - 1.0, -1.0, 1.0)
