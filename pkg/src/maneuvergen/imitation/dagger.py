"""Confidence-gated dataset aggregation around the behavior-cloned policy.

Per outer iteration: pick the confidence gain that maximizes the lambda sum
under the stability envelope, roll the mixed policy over every trim point,
aggregate each visited window with the expert's action as its label, stop
if the mean rate error beat the threshold, otherwise retrain and repeat.
"""

from dataclasses import dataclass, field

import numpy as np

from ..expert.ndi import NdiGains
from ..expert.profiles import ReferenceProfile
from ..nnet import NetworkSpec
from .bc import train_bc
from .confidence import (StabilityEnvelope, X_FLOOR_DEFAULT,
                         confidence_gain_search, e_pqr)
from .dataset import WindowedDataset, features_from_demo, windows_from_rollout
from .policy import LearnerPolicy, rollout_policy


@dataclass(frozen=True)
class DaggerConfig:
    eps_pqr: float = 0.05                       # rad/s termination threshold
    cg_grid: tuple = (0.05, 0.1, 0.2, 0.3, 0.5, 0.8)
    max_iters: int = 5
    trim_points: tuple = ((700.0, 15000.0), (750.0, 15000.0), (800.0, 15000.0))
    x_floor: float = X_FLOOR_DEFAULT
    retrain_epochs: int = 8
    retrain_batch: int = 256
    retrain_lr: float = 1e-3
    lambda_rec: float = 0.5
    reset_weights: bool = False                 # retrain from scratch instead
    seed: int = 0

    def validate(self):
        if self.eps_pqr <= 0.0:
            raise ValueError("eps_pqr must be positive")
        if not self.cg_grid or any(not 0.0 < c <= 1.0 for c in self.cg_grid):
            raise ValueError("confidence-gain grid must lie in (0, 1]")
        return self


@dataclass
class DaggerResult:
    weights: object                     # policy of the returned stage
    per_iteration_weights: list         # weights entering each iteration
    log: list                           # per-iteration dicts
    converged: bool
    budget_exhausted: bool


def c_dagger(initial_weights, windows: WindowedDataset, spec: NetworkSpec,
             profile: ReferenceProfile, params, config: DaggerConfig,
             gains: NdiGains | None = None,
             stability: StabilityEnvelope | None = None) -> DaggerResult:
    """Run the aggregation loop from behavior-cloned weights.

    Returns the converged weights, or the best-so-far (lowest mixed-rollout
    rate error) with budget_exhausted set.
    """
    config.validate()
    gains = gains or NdiGains()
    stability = stability or StabilityEnvelope()
    rng = np.random.default_rng(config.seed)
    weights = initial_weights
    stats = windows.dataset.stats
    expected = len(profile)
    log = []
    iter_weights = []
    best = (float("inf"), initial_weights)
    converged = False

    for it in range(1, config.max_iters + 1):
        policy = LearnerPolicy(spec=spec, weights=weights, stats=stats)

        def run_mixed(cg, tp):
            rr = rollout_policy(policy, tp, profile, params, mix_cg=cg,
                                gains=gains, x_floor=config.x_floor,
                                record_expert=False,
                                stop_when=stability.contains)
            # bootstrap steps carry lambda 0, so summing the full record
            # matches the algorithm's lambda accounting
            return rr.demo.lam, rr.stable_exit

        cg, diag = confidence_gain_search(
            run_mixed, config.trim_points, config.cg_grid, expected)

        rollouts = []
        new_windows = 0
        for tp in config.trim_points:
            rr = rollout_policy(policy, tp, profile, params, mix_cg=cg,
                                gains=gains, x_floor=config.x_floor,
                                record_expert=True)
            rollouts.append(rr)
            raw = features_from_demo(rr.demo)
            starts, tgts = windows_from_rollout(
                windows.dataset, raw, rr.demo.expert_commands, spec.window,
                demo_id=f"dagger-it{it}@{tp[0]:.0f}/{tp[1]:.0f}")
            if len(starts):
                windows.append_windows(starts, tgts, rng)
                new_windows += len(starts)

        err = e_pqr([rr.demo for rr in rollouts], expected_len=expected)
        iter_weights.append(weights)
        log.append({"iteration": it, "c_g": cg, "e_pqr": err,
                    "dataset_windows": len(windows),
                    "new_windows": new_windows,
                    "lambda_sums": {f"{k:g}": v for k, v in diag.items()}})
        if err < best[0]:
            best = (err, weights)
        if err < config.eps_pqr:
            converged = True
            break
        if it == config.max_iters:
            break
        result = train_bc(
            windows, spec, epochs=config.retrain_epochs,
            batch=config.retrain_batch, lr=config.retrain_lr,
            lambda_rec=config.lambda_rec, seed=config.seed + it,
            start_weights=None if config.reset_weights else weights)
        weights = result.weights

    return DaggerResult(
        weights=weights if converged else best[1],
        per_iteration_weights=iter_weights, log=log, converged=converged,
        budget_exhausted=not converged)
