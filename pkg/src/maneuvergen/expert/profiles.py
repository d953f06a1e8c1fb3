"""Analytic body-rate reference profiles for the two aerobatic maneuvers.

Split-S: roll inverted (the roll-rate pulse integrates to pi), then pull
through a half loop in two phases with a brief unloaded glide between them
so the dive rebuilds airspeed before the finishing pull; a final de-roll
pulse removes the residual bank.  The first pull rotates about a body axis
tilted a few degrees off pure pitch, which steers the Euler pitch angle
around the -90 deg kinematic singularity while still reversing heading.
The pull-phase split adapts mildly to the trim airspeed: slow entries leave
more of the rotation to the second pull, after the dive has restored
energy.

Chandelle: climbing turn that reverses into a descending turn in the
opposite direction; roll, pitch, and yaw rates all cross zero at the apex.

Segment timing is expressed as fractions of the total profile duration, so
sample count and dt trade off freely; ramps are raised-cosine, making the
profiles C1-smooth.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import UnknownManeuver

P_LIMIT, Q_LIMIT, R_LIMIT = 3.0, 2.0, 1.0
MAX_SAMPLE_JUMP = 0.1  # rad/s between consecutive samples


def _pulse(t, t0, T, total_angle, ramp_frac):
    """Trapezoidal rate pulse with raised-cosine ramps; integral = total_angle."""
    s = t - t0
    if s <= 0.0 or s >= T:
        return 0.0
    tr = ramp_frac * T
    amp = total_angle / (T - tr)
    if s < tr:
        return amp * 0.5 * (1.0 - math.cos(math.pi * s / tr))
    if s > T - tr:
        return amp * 0.5 * (1.0 - math.cos(math.pi * (T - s) / tr))
    return amp


@dataclass(frozen=True)
class ProfileShapes:
    """Free shape constants of the synthetic maneuvers (config-exposed)."""

    # Split-S: segment (start, length) fractions of the total duration
    splits_roll: tuple = (0.01, 0.17)
    splits_pull1: tuple = (0.19, 0.24)
    splits_glide: tuple = (0.41, 0.10)
    splits_pull2: tuple = (0.49, 0.44)
    splits_deroll: tuple = (0.915, 0.075)
    splits_roll_angle: float = math.pi        # rad, the inverted roll
    splits_pull_angle: float = math.pi        # rad, total half-loop rotation
    splits_glide_angle: float = 0.06 * math.pi
    splits_tilt: float = 12.0 * math.pi / 180.0  # pull1 axis tilt off body-y
    # fraction of the pull carried by pull1, scaled by trim airspeed
    splits_phase_base: float = 0.40
    splits_phase_ref_vt: float = 750.0
    splits_phase_min: float = 0.40
    splits_phase_max: float = 0.52
    splits_ramps: tuple = (0.35, 0.40, 0.45, 0.38, 0.40)  # roll/p1/glide/p2/deroll
    # Chandelle sinusoid amplitudes (rad/s)
    chandelle_roll_amp: float = 0.22
    chandelle_pitch_amp: float = 0.13
    chandelle_yaw_amp: float = 0.04


@dataclass(frozen=True)
class ReferenceProfile:
    """Sampled (P_d, Q_d, R_d) reference with its time derivative."""

    dt: float
    kind: str
    samples: np.ndarray          # (n, 3) rad/s
    rates_dot: np.ndarray = field(repr=False, default=None)  # (n, 3) rad/s^2

    def __post_init__(self):
        n = len(self.samples)
        if n == 0:
            raise ValueError("empty reference profile")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("non-finite reference sample")
        pmax, qmax, rmax = np.abs(self.samples).max(axis=0)
        if pmax > P_LIMIT or qmax > Q_LIMIT or rmax > R_LIMIT:
            raise ValueError(
                f"profile rates ({pmax:.2f}, {qmax:.2f}, {rmax:.2f}) exceed "
                f"({P_LIMIT}, {Q_LIMIT}, {R_LIMIT}) rad/s bounds")
        if n > 1:
            jump = np.abs(np.diff(self.samples[:, 0])).max()
            if jump >= MAX_SAMPLE_JUMP:
                raise ValueError(f"roll-rate sample jump {jump:.3f} rad/s too large")
        if self.rates_dot is None:
            object.__setattr__(self, "rates_dot", _finite_difference(self.samples, self.dt))

    def __len__(self):
        return len(self.samples)

    @property
    def duration(self):
        return len(self.samples) * self.dt


def _finite_difference(samples, dt):
    n = len(samples)
    d = np.zeros_like(samples)
    if n >= 3:
        d[1:-1] = (samples[2:] - samples[:-2]) / (2.0 * dt)
        d[0] = (samples[1] - samples[0]) / dt
        d[-1] = (samples[-1] - samples[-2]) / dt
    elif n == 2:
        d[:] = (samples[1] - samples[0]) / dt
    return d


def _splits_rates(t, D, vt_trim, sh: ProfileShapes):
    r_roll, r_p1, r_gl, r_p2, r_dr = sh.splits_ramps
    phase = sh.splits_phase_base * vt_trim / sh.splits_phase_ref_vt
    phase = min(max(phase, sh.splits_phase_min), sh.splits_phase_max)
    half_glide = 0.5 * sh.splits_glide_angle

    p = _pulse(t, sh.splits_roll[0] * D, sh.splits_roll[1] * D,
               sh.splits_roll_angle, r_roll)
    w1 = _pulse(t, sh.splits_pull1[0] * D, sh.splits_pull1[1] * D,
                phase * sh.splits_pull_angle - half_glide, r_p1)
    wg = _pulse(t, sh.splits_glide[0] * D, sh.splits_glide[1] * D,
                sh.splits_glide_angle, r_gl)
    w2 = _pulse(t, sh.splits_pull2[0] * D, sh.splits_pull2[1] * D,
                (1.0 - phase) * sh.splits_pull_angle - half_glide, r_p2)
    p += _pulse(t, sh.splits_deroll[0] * D, sh.splits_deroll[1] * D,
                2.0 * sh.splits_tilt, r_dr)
    q = w1 * math.cos(sh.splits_tilt) + wg + w2
    r = w1 * math.sin(sh.splits_tilt)
    return p, q, r


def _chandelle_rates(t, D, vt_trim, sh: ProfileShapes):
    s = math.sin(2.0 * math.pi * t / D)
    return (sh.chandelle_roll_amp * s, sh.chandelle_pitch_amp * s,
            sh.chandelle_yaw_amp * s)


def reference_profile(kind, trim_state, n_samples: int, dt: float,
                      shapes: ProfileShapes | None = None) -> ReferenceProfile:
    """Generate a maneuver reference of n_samples at spacing dt.

    ``trim_state`` anchors the maneuver to its trim condition (the Split-S
    pull phasing adapts to the trim airspeed); pass the state returned by
    the trim solver.
    """
    if n_samples < 100:
        raise ValueError("profiles need at least 100 samples")
    sh = shapes or ProfileShapes()
    vt_trim = getattr(trim_state, "Vt", sh.splits_phase_ref_vt)
    key = kind.lower().replace("-", "").replace("_", "")
    if key == "splits":
        fn, tag = _splits_rates, "SplitS"
    elif key == "chandelle":
        fn, tag = _chandelle_rates, "Chandelle"
    else:
        raise UnknownManeuver(f"no reference profile for maneuver {kind!r}")

    D = n_samples * dt
    out = np.empty((n_samples, 3), dtype=np.float64)
    for i in range(n_samples):
        out[i] = fn(i * dt, D, vt_trim, sh)
    return ReferenceProfile(dt=dt, kind=tag, samples=out)
