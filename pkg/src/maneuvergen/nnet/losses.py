"""Composite training objective: action MSE plus weighted reconstruction MSE."""

import numpy as np

from ..errors import ShapeMismatch


def composite_loss(prediction, reconstruction, target_action, target_window,
                   lambda_rec: float) -> float:
    p = np.asarray(prediction, dtype=np.float64)
    r = np.asarray(reconstruction, dtype=np.float64)
    ta = np.asarray(target_action, dtype=np.float64)
    tw = np.asarray(target_window, dtype=np.float64)
    if p.shape != ta.shape:
        raise ShapeMismatch(f"prediction {p.shape} vs target action {ta.shape}")
    if r.shape != tw.shape:
        raise ShapeMismatch(f"reconstruction {r.shape} vs target window {tw.shape}")
    return float(((p - ta) ** 2).mean() + lambda_rec * ((r - tw) ** 2).mean())
