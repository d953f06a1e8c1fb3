"""Adam optimizer with per-parameter freezing."""

from dataclasses import dataclass, field

import numpy as np

from .layout import FreezeMask, NetworkWeights


@dataclass
class AdamState:
    """First/second moment estimates and step counter."""

    m: np.ndarray
    v: np.ndarray
    t: int = 0
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    @classmethod
    def fresh(cls, n_params: int, lr: float = 1e-3, beta1: float = 0.9,
              beta2: float = 0.999, eps: float = 1e-8):
        return cls(m=np.zeros(n_params), v=np.zeros(n_params), t=0,
                   lr=lr, beta1=beta1, beta2=beta2, eps=eps)


def adam_step(weights: NetworkWeights, grads, state: AdamState,
              mask: FreezeMask | None = None) -> NetworkWeights:
    """One Adam update applied only where the mask is unfrozen.

    Frozen entries of the weight vector (and their moments) are left
    bit-identical.  Returns new weights; the state mutates in place.
    """
    g = np.asarray(grads, dtype=np.float64)
    if g.shape != weights.values.shape:
        raise ValueError(f"gradient length {g.shape} != weights {weights.values.shape}")
    if mask is not None and len(mask) != len(weights):
        raise ValueError("freeze mask length mismatch")
    if state.m.shape != weights.values.shape:
        raise ValueError("Adam state length mismatch")

    state.t += 1
    live = slice(None) if mask is None else ~mask.mask
    out = weights.values.copy()
    m, v = state.m, state.v
    m[live] = state.beta1 * m[live] + (1.0 - state.beta1) * g[live]
    v[live] = state.beta2 * v[live] + (1.0 - state.beta2) * g[live] ** 2
    mh = m[live] / (1.0 - state.beta1 ** state.t)
    vh = v[live] / (1.0 - state.beta2 ** state.t)
    out[live] -= state.lr * mh / (np.sqrt(vh) + state.eps)
    return NetworkWeights(out, weights.layout, weights.spec_hash)
