"""Behavior-cloning trainer: minibatch Adam on the composite objective."""

from dataclasses import dataclass, field

import numpy as np

from ..nnet import AdamState, NetworkSpec, adam_step, backward, forward_batch, init_weights
from ..nnet.layout import FreezeMask, NetworkWeights
from ..nnet.losses import composite_loss
from .dataset import SPLIT_TRAIN, SPLIT_VAL, WindowedDataset

EVAL_BATCH = 512


@dataclass
class TrainResult:
    weights: NetworkWeights
    history: list                 # dicts: epoch, train_loss, val_loss
    best_epoch: int
    best_val_loss: float
    final_weights: NetworkWeights = field(repr=False, default=None)


def evaluate_loss(weights, windows: WindowedDataset, spec, lambda_rec,
                  which=SPLIT_VAL):
    idx = windows.split_indices(which)
    if len(idx) == 0:
        return float("nan")
    total = 0.0
    for lo in range(0, len(idx), EVAL_BATCH):
        chunk = idx[lo:lo + EVAL_BATCH]
        X, T = windows.batch(chunk)
        pred, recon, _ = forward_batch(weights, X, spec)
        total += composite_loss(pred, recon, T, X, lambda_rec) * len(chunk)
    return total / len(idx)


def train_bc(windows: WindowedDataset, spec: NetworkSpec, epochs: int,
             batch: int, lr: float, lambda_rec: float = 0.5, seed: int = 0,
             start_weights: NetworkWeights | None = None,
             mask: FreezeMask | None = None,
             val_every: int = 1) -> TrainResult:
    """Train on the 70% split, track validation loss, return the best-epoch
    weights.  Deterministic for a fixed seed and inputs."""
    train_idx = windows.split_indices(SPLIT_TRAIN)
    if len(train_idx) == 0:
        raise ValueError("training split is empty")
    rng = np.random.default_rng(seed)
    weights = start_weights.copy() if start_weights is not None \
        else init_weights(spec, seed)
    adam = AdamState.fresh(len(weights), lr=lr)

    history = []
    best = (float("inf"), 0, weights.copy())
    for epoch in range(1, epochs + 1):
        perm = rng.permutation(train_idx)
        train_loss = 0.0
        for lo in range(0, len(perm), batch):
            chunk = perm[lo:lo + batch]
            X, T = windows.batch(chunk)
            loss, grad = backward(weights, X, T, spec, lambda_rec)
            weights = adam_step(weights, grad, adam, mask)
            train_loss += loss * len(chunk)
        train_loss /= len(perm)
        if epoch % val_every == 0 or epoch == epochs or epoch == 1:
            val_loss = evaluate_loss(weights, windows, spec, lambda_rec)
        else:
            val_loss = float("nan")
        history.append({"epoch": epoch, "train_loss": train_loss,
                        "val_loss": val_loss})
        if not np.isnan(val_loss) and val_loss < best[0]:
            best = (val_loss, epoch, weights.copy())
    return TrainResult(weights=best[2], history=history, best_epoch=best[1],
                       best_val_loss=best[0], final_weights=weights)
