from .obs import ObsBounds, observe
from .actions import compose, reward, should_terminate
from .noise import OuConfig, OuState, ou_noise_step
from .replay import ReplayBuffer, Transition
from .td3 import ActorCritic, Td3Config, TrainingHistory, td3_update, train_td3

__all__ = [
    "ObsBounds",
    "observe",
    "compose",
    "reward",
    "should_terminate",
    "OuConfig",
    "OuState",
    "ou_noise_step",
    "ReplayBuffer",
    "Transition",
    "ActorCritic",
    "Td3Config",
    "TrainingHistory",
    "td3_update",
    "train_td3",
]
