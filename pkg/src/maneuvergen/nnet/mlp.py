"""Small dense networks with manual backprop, for the actor-critic stage.

tanh hidden layers; the output layer is tanh (bounded actions) or linear
(value estimates).
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from ..errors import ShapeMismatch
from .layout import NetworkWeights, ParamLayout


@dataclass(frozen=True)
class MlpSpec:
    sizes: tuple                 # (input, hidden..., output)
    out_activation: str = "linear"   # "linear" or "tanh"

    def __post_init__(self):
        if len(self.sizes) < 2 or any(s < 1 for s in self.sizes):
            raise ValueError("MLP needs input and output sizes >= 1")
        if self.out_activation not in ("linear", "tanh"):
            raise ValueError("out_activation must be linear or tanh")
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))

    def spec_hash(self) -> str:
        blob = f"mlp:{list(self.sizes)}:{self.out_activation}"
        return hashlib.sha256(blob.encode()).hexdigest()


def build_mlp_layout(spec: MlpSpec) -> ParamLayout:
    entries = []
    for k in range(len(spec.sizes) - 1):
        entries += [(f"l{k}.W", (spec.sizes[k], spec.sizes[k + 1])),
                    (f"l{k}.b", (spec.sizes[k + 1],))]
    return ParamLayout(entries)


def init_mlp(spec: MlpSpec, rng: np.random.Generator) -> NetworkWeights:
    layout = build_mlp_layout(spec)
    flat = np.empty(layout.size)
    for name, off, shape in layout.entries:
        fan_in = shape[0] if name.endswith(".W") else layout.index[name[:-2] + ".W"][1][0]
        lim = 1.0 / np.sqrt(fan_in)
        n = int(np.prod(shape))
        flat[off:off + n] = rng.uniform(-lim, lim, size=n)
    return NetworkWeights(flat, layout, spec.spec_hash())


def mlp_forward(weights: NetworkWeights, x, spec: MlpSpec):
    """x (B, in) -> (y (B, out), cache)."""
    a = np.atleast_2d(np.asarray(x, dtype=np.float64))
    if a.shape[1] != spec.sizes[0]:
        raise ShapeMismatch(f"input width {a.shape[1]} != {spec.sizes[0]}")
    acts = [a]
    n = len(spec.sizes) - 1
    for k in range(n):
        z = a @ weights.get(f"l{k}.W") + weights.get(f"l{k}.b")
        if k < n - 1 or spec.out_activation == "tanh":
            a = np.tanh(z)
        else:
            a = z
        acts.append(a)
    return a, acts


def mlp_backward(weights: NetworkWeights, cache, dy, spec: MlpSpec):
    """Returns (flat parameter gradient, input gradient)."""
    acts = cache
    da = np.asarray(dy, dtype=np.float64)
    grad = np.zeros(weights.layout.size)
    n = len(spec.sizes) - 1
    for k in range(n - 1, -1, -1):
        out = acts[k + 1]
        if k < n - 1 or spec.out_activation == "tanh":
            da = da * (1.0 - out * out)
        weights.layout.view(grad, f"l{k}.W")[:] = acts[k].T @ da
        weights.layout.view(grad, f"l{k}.b")[:] = da.sum(axis=0)
        da = da @ weights.get(f"l{k}.W").T
    return grad, da
