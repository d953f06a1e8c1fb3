"""Adaptation to a perturbed airframe from one demonstration.

The recurrent autoencoder layers (encoder and decoder LSTM cells) are
frozen to preserve the source model's grasp of the flight dynamics; the
remaining parameters (reconstruction projection and prediction head) are
fine-tuned on the windows of a single target-aircraft demonstration.  The
source normalization stats are reused unchanged: the frozen encoder was
trained under them, and refitting would silently shift its input
distribution.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DemoTooShort
from .expert.rollout import Demonstration
from .imitation.bc import TrainResult, train_bc
from .imitation.dataset import (Dataset, NormStats, WindowedDataset,
                                _assign_splits, _raw_targets,
                                features_from_demo, make_windows)
from .nnet import NetworkSpec
from .nnet.layout import FreezeMask, NetworkWeights

RECURRENT_PREFIXES = ("enc", "dec")


@dataclass(frozen=True)
class TransferConfig:
    lr: float = 5e-5
    batch: int = 64
    epochs: int = 2000
    lambda_rec: float = 0.5
    freeze_prefixes: tuple = RECURRENT_PREFIXES
    val_every: int = 20
    seed: int = 0

    def validate(self):
        if self.lr <= 0.0:
            raise ValueError("learning rate must be positive")
        return self


def _is_recurrent_cell(name, prefixes):
    # dec0.Wx is a recurrent cell parameter; proj.* is the dense projection
    head = name.split(".")[0]
    return any(head.startswith(p) and head[len(p):].isdigit() for p in prefixes)


def default_freeze_mask(spec: NetworkSpec,
                        prefixes=RECURRENT_PREFIXES) -> FreezeMask:
    """Freeze every encoder/decoder LSTM-cell parameter; leave the
    projection and prediction head trainable."""
    from .nnet.composite import build_layout
    layout = build_layout(spec)
    return FreezeMask.from_layer_names(
        layout, lambda name: _is_recurrent_cell(name, prefixes))


def windows_from_single_demo(demo: Demonstration, stats: NormStats,
                             window: int, seed: int) -> WindowedDataset:
    """Window one target demonstration under the frozen source stats."""
    if len(demo) < window + 1:
        raise DemoTooShort(
            f"target demo of {len(demo)} samples cannot host a {window}-window")
    raw = features_from_demo(demo)
    ds = Dataset(samples=stats.normalize(raw),
                 targets=stats.normalize_action(_raw_targets(raw)),
                 stats=stats, dt=demo.dt,
                 demo_bounds=[(0, len(raw))],
                 demo_ids=[f"target:{demo.maneuver}@{demo.trim_vt:.0f}"])
    return make_windows(ds, window=window, seed=seed)


def fine_tune(weights: NetworkWeights, target_demo: Demonstration,
              spec: NetworkSpec, stats: NormStats,
              config: TransferConfig | None = None):
    """Masked fine-tuning on the single demonstration's windows.

    Returns (TrainResult, FreezeMask, WindowedDataset).  Frozen parameters
    of the result are bit-identical to the input weights.
    """
    config = (config or TransferConfig()).validate()
    mask = default_freeze_mask(spec, config.freeze_prefixes)
    if mask.trainable_count == 0:
        raise ValueError("freeze selector leaves no trainable parameters")
    windows = windows_from_single_demo(target_demo, stats, spec.window,
                                       config.seed)
    result = train_bc(windows, spec, epochs=config.epochs, batch=config.batch,
                      lr=config.lr, lambda_rec=config.lambda_rec,
                      seed=config.seed, start_weights=weights, mask=mask,
                      val_every=config.val_every)
    return result, mask, windows
