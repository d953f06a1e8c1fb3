from .spec import NetworkSpec
from .layout import FreezeMask, NetworkWeights, ParamLayout
from .composite import backward, forward, forward_batch, init_weights
from .losses import composite_loss
from .adam import AdamState, adam_step
from .checkpoint import load, save
from .mlp import MlpSpec, init_mlp, mlp_backward, mlp_forward

__all__ = [
    "NetworkSpec",
    "ParamLayout",
    "NetworkWeights",
    "FreezeMask",
    "init_weights",
    "forward",
    "forward_batch",
    "backward",
    "composite_loss",
    "AdamState",
    "adam_step",
    "save",
    "load",
    "MlpSpec",
    "init_mlp",
    "mlp_forward",
    "mlp_backward",
]
