"""Closed-loop expert rollouts producing imitation demonstrations."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import (EnvelopeViolation, ExpertDiverged, InversionSingular,
                      NumericalDivergence)
from ..simdyn.eom import step
from ..simdyn.params import AircraftParams
from ..simdyn.trim import trim
from ..simdyn.types import AircraftState, ControlInput, SurfaceState
from .ndi import NdiGains, ndi_action
from .profiles import ReferenceProfile

STATE_COLUMNS = ("Vt", "alpha", "beta", "phi", "theta", "psi",
                 "P", "Q", "R", "pn", "pe", "pd", "pow")
CONTROL_COLUMNS = ("dT", "dEle", "dAil", "dRud")


@dataclass
class Demonstration:
    """Uniformly sampled (state, surfaces, command, rate-reference) record.

    ``lam`` marks who executed each sample: 1 learner, 0 expert.
    """

    dt: float
    times: np.ndarray        # (n,)
    states: np.ndarray       # (n, 13)
    surfaces: np.ndarray     # (n, 4)
    commands: np.ndarray     # (n, 4)
    refs: np.ndarray         # (n, 3)
    lam: np.ndarray          # (n,)
    trim_vt: float
    trim_alt: float
    params_id: str
    maneuver: str
    diverged: bool = False
    expert_commands: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        n = len(self.times)
        for name in ("states", "surfaces", "commands", "refs", "lam"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"demonstration column {name} length mismatch")
        if n >= 2:
            spacing = np.diff(self.times)
            if not np.allclose(spacing, self.dt, rtol=0.0, atol=1e-12):
                raise ValueError("demonstration sampling is not uniform")

    def __len__(self):
        return len(self.times)

    def rate_deltas(self):
        """Per-sample (|P_d-P|, |Q_d-Q|, |R_d-R|) array, shape (n, 3)."""
        return np.abs(self.refs - self.states[:, 6:9])


class _Recorder:
    def __init__(self, n):
        self.times = np.zeros(n)
        self.states = np.zeros((n, 13))
        self.surfaces = np.zeros((n, 4))
        self.commands = np.zeros((n, 4))
        self.refs = np.zeros((n, 3))
        self.lam = np.ones(n)
        self.expert_commands = np.zeros((n, 4))
        self.filled = 0

    def add(self, t, state, surf, cmd, ref, lam, expert_cmd=None):
        i = self.filled
        self.times[i] = t
        self.states[i] = state.as_tuple()
        self.surfaces[i] = surf.as_tuple()
        self.commands[i] = cmd.as_tuple()
        self.refs[i] = ref
        self.lam[i] = lam
        if expert_cmd is not None:
            self.expert_commands[i] = expert_cmd.as_tuple()
        self.filled += 1

    def to_demo(self, dt, trim_vt, trim_alt, params_id, maneuver,
                diverged=False, with_expert=False):
        k = self.filled
        return Demonstration(
            dt=dt, times=self.times[:k], states=self.states[:k],
            surfaces=self.surfaces[:k], commands=self.commands[:k],
            refs=self.refs[:k], lam=self.lam[:k],
            trim_vt=trim_vt, trim_alt=trim_alt,
            params_id=params_id, maneuver=maneuver, diverged=diverged,
            expert_commands=self.expert_commands[:k] if with_expert else None,
        )


def expert_step(state, surfaces, profile, i, gains, params,
                trim_throttle, vt_ref):
    """The expert's command for sample i of the profile."""
    return ndi_action(
        state, tuple(profile.samples[i]), gains, params, trim_throttle,
        surfaces=surfaces, ref_dot=tuple(profile.rates_dot[i]), vt_ref=vt_ref)


def run_expert(trim_point, profile: ReferenceProfile, params: AircraftParams,
               gains: NdiGains | None = None) -> Demonstration:
    """Roll the NDI expert through a full reference profile.

    Aborts with ExpertDiverged rather than returning a diverged trajectory.
    """
    gains = (gains or NdiGains()).validate()
    vt, alt = trim_point
    state, trim_cmd = trim(vt, alt, params)
    surfaces = SurfaceState.from_command(trim_cmd)
    rec = _Recorder(len(profile))
    try:
        for i in range(len(profile)):
            cmd = expert_step(state, surfaces, profile, i, gains, params,
                              trim_cmd.dT, vt)
            rec.add(i * profile.dt, state, surfaces, cmd,
                    profile.samples[i], lam=0.0)
            state, surfaces = step(state, cmd, surfaces, params, profile.dt)
    except (NumericalDivergence, InversionSingular, EnvelopeViolation) as exc:
        raise ExpertDiverged(
            f"expert left the valid region at sample {rec.filled}: {exc}") from exc
    return rec.to_demo(profile.dt, vt, alt, params.ident(), profile.kind)
