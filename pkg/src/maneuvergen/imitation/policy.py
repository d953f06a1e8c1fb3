"""Closed-loop rollout of a learned policy, optionally mixed with the
expert through the confidence switch.

The windowed policy is undefined before one full history window exists, so
the first W steps of every rollout are flown by the expert; the lambda
record of the contract covers the post-bootstrap steps.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import EnvelopeViolation, InversionSingular, NumericalDivergence
from ..expert.ndi import NdiGains
from ..expert.profiles import ReferenceProfile
from ..expert.rollout import Demonstration, _Recorder, expert_step
from ..nnet import NetworkSpec
from ..nnet.composite import predict_only
from ..nnet.layout import NetworkWeights
from ..simdyn.eom import step
from ..simdyn.trim import trim
from ..simdyn.types import ControlInput, SurfaceState
from .confidence import X_FLOOR_DEFAULT, deltas, switching_lambda
from .dataset import (CONTROL_SLICE, DEFAULT_GRAVITY, N_FEATURES, NormStats,
                      normal_acceleration)


@dataclass
class LearnerPolicy:
    """Network weights plus the normalization stats they were trained under."""

    spec: NetworkSpec
    weights: NetworkWeights
    stats: NormStats
    gravity: float = DEFAULT_GRAVITY

    def action(self, raw_window) -> ControlInput:
        """Map a raw (W, 18) feature window to a clipped command."""
        x = self.stats.normalize(raw_window)
        pred = predict_only(self.weights, x, self.spec)
        cmd = self.stats.denormalize_action(pred)
        return ControlInput(*cmd).clipped()


@dataclass
class RolloutResult:
    demo: Demonstration
    lam_record: np.ndarray      # per post-bootstrap step
    diverged: bool
    stable_exit: int            # first step outside stop_when, else len(demo)


def _feature_row(out, state, cmd, t, gravity):
    st = state.as_tuple()
    out[0:12] = st[0:12]
    out[12] = st[7] * st[0] / gravity + np.cos(st[4]) * np.cos(st[3])
    out[13:17] = cmd.as_tuple()
    out[17] = t


def rollout_policy(policy: LearnerPolicy, trim_point, profile: ReferenceProfile,
                   params, mix_cg: float | None = None,
                   gains: NdiGains | None = None,
                   x_floor: float = X_FLOOR_DEFAULT,
                   record_expert: bool = True,
                   stop_when=None) -> RolloutResult:
    """Roll the learner through a profile from a trim point.

    mix_cg enables lambda-switching against the built-in expert at that
    confidence gain (mix_cg=None runs the pure learner after bootstrap).
    ``stop_when(state)`` truncates the rollout when it returns False.
    Divergence truncates rather than raising.
    """
    gains = (gains or NdiGains()).validate()
    vt_ref, alt = trim_point
    state, trim_cmd = trim(vt_ref, alt, params)
    surfaces = SurfaceState.from_command(trim_cmd)
    n = len(profile)
    W = policy.spec.window
    rec = _Recorder(n)
    raw = np.empty((n, N_FEATURES))
    lam_record = []
    diverged = False
    stable_exit = n
    steps_done = 0
    for j in range(n):
        if stop_when is not None and not stop_when(state):
            stable_exit = j
            break
        ref_j = profile.samples[j]
        need_expert = (j < W) or (mix_cg is not None) or record_expert
        expert_cmd = None
        if need_expert:
            try:
                expert_cmd = expert_step(state, surfaces, profile, j, gains,
                                         params, trim_cmd.dT, vt_ref)
            except (InversionSingular, EnvelopeViolation):
                diverged = True
                break
        if j < W:
            cmd, lam_j = expert_cmd, 0
        else:
            learner_cmd = policy.action(raw[j - W:j])
            if mix_cg is None:
                cmd, lam_j = learner_cmd, 1
            else:
                lam_j = switching_lambda(deltas(state, ref_j), ref_j,
                                         mix_cg, x_floor)
                cmd = learner_cmd if lam_j else expert_cmd
            lam_record.append(lam_j)
        _feature_row(raw[j], state, cmd, j * profile.dt, policy.gravity)
        rec.add(j * profile.dt, state, surfaces, cmd, ref_j, float(lam_j),
                expert_cmd)
        steps_done = j + 1
        try:
            state, surfaces = step(state, cmd, surfaces, params, profile.dt)
        except (NumericalDivergence, EnvelopeViolation):
            diverged = True
            break
    if stable_exit > steps_done:
        stable_exit = steps_done
    demo = rec.to_demo(profile.dt, vt_ref, alt, params.ident(), profile.kind,
                       diverged=diverged, with_expert=record_expert)
    return RolloutResult(demo=demo, lam_record=np.asarray(lam_record),
                         diverged=diverged, stable_exit=stable_exit)
