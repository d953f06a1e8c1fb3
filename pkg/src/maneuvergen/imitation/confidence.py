"""Confidence machinery: rate deltas, the lambda switch, tracking error,
and the confidence-gain grid search."""

from dataclasses import dataclass

import numpy as np

from ..errors import AllCandidatesUnstable

DEG = np.pi / 180.0
X_FLOOR_DEFAULT = 0.05  # rad/s floor under the relative thresholds


def deltas(state, ref_sample):
    """(|P_d - P|, |Q_d - Q|, |R_d - R|) in rad/s."""
    pd, qd, rd = ref_sample
    return (abs(pd - state.P), abs(qd - state.Q), abs(rd - state.R))


def switching_lambda(delta3, ref_sample, c_g, x_floor=X_FLOOR_DEFAULT) -> int:
    """1 executes the learner, 0 the expert.

    Thresholds are c_g * max(|ref|, x_floor) per axis; the floor keeps the
    relative tolerance meaningful where the reference crosses zero.  All
    three comparisons are strict, so c_g = 0 always defers to the expert.
    """
    dp, dq, dr = delta3
    pd, qd, rd = ref_sample
    return int(dp < c_g * max(abs(pd), x_floor)
               and dq < c_g * max(abs(qd), x_floor)
               and dr < c_g * max(abs(rd), x_floor))


@dataclass(frozen=True)
class StabilityEnvelope:
    """The state set rollouts must stay inside during confidence evaluation."""

    alpha_min: float = -10.0 * DEG
    alpha_max: float = 45.0 * DEG
    beta_max: float = 30.0 * DEG
    vt_min: float = 200.0
    vt_max: float = 1500.0
    alt_min: float = 500.0
    rate_max: float = 10.0

    def contains(self, state) -> bool:
        return (self.alpha_min <= state.alpha <= self.alpha_max
                and abs(state.beta) <= self.beta_max
                and self.vt_min <= state.Vt <= self.vt_max
                and state.altitude > self.alt_min
                and abs(state.P) <= self.rate_max
                and abs(state.Q) <= self.rate_max
                and abs(state.R) <= self.rate_max)


def per_step_error(demo):
    """Mean of the three absolute rate deltas at every sample, shape (n,)."""
    return demo.rate_deltas().sum(axis=1) / 3.0


def e_pqr(rollouts, expected_len=None) -> float:
    """Mean per-step average rate error across rollouts (rad/s).

    Truncated rollouts are padded to the expected length with their own
    worst per-step error (1.0 rad/s when nothing was recorded), so early
    divergence cannot lower the average.
    """
    rollouts = list(rollouts)
    if not rollouts:
        raise ValueError("no rollouts given")
    n = expected_len or max(len(r) for r in rollouts)
    total = 0.0
    for r in rollouts:
        d = per_step_error(r)
        pad = n - len(d)
        if pad > 0:
            fill = float(d.max()) if len(d) else 1.0
            total += float(d.sum()) + pad * fill
        else:
            total += float(d.sum())
    return total / (n * len(rollouts))


def confidence_gain_search(run_mixed_rollout, trim_points, grid,
                           expected_len):
    """Pick the confidence gain maximizing the lambda sum over the grid.

    ``run_mixed_rollout(c_g, trim_point)`` must return (lam_array,
    exit_idx) for one mixed rollout, where exit_idx is the first step at
    which the trajectory left the stability envelope (or the rollout
    length when it never did); lambda stops accruing at the exit.  Ties
    break toward the smallest candidate.
    """
    if len(grid) == 0:
        raise ValueError("empty confidence-gain grid")
    candidates = sorted(grid)
    best_cg, best_lam = None, -1.0
    diagnostics = {}
    all_unstable = True
    for cg in candidates:
        lam_total = 0.0
        for tp in trim_points:
            lam, exit_idx = run_mixed_rollout(cg, tp)
            if exit_idx >= expected_len:
                all_unstable = False
            lam_total += float(np.asarray(lam[:exit_idx]).sum())
        diagnostics[cg] = lam_total
        if lam_total > best_lam:
            best_cg, best_lam = cg, lam_total
    if all_unstable:
        raise AllCandidatesUnstable(
            "every confidence-gain candidate left the stability envelope "
            "at every trim point")
    return best_cg, diagnostics
