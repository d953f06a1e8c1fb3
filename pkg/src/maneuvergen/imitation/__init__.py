from .dataset import (Dataset, NormStats, WindowedDataset, build_dataset,
                      features_from_demo, make_windows, FEATURE_NAMES)
from .bc import TrainResult, train_bc
from .confidence import (StabilityEnvelope, confidence_gain_search, deltas,
                         e_pqr, switching_lambda)
from .policy import LearnerPolicy, RolloutResult, rollout_policy
from .dagger import DaggerConfig, DaggerResult, c_dagger

__all__ = [
    "FEATURE_NAMES",
    "NormStats",
    "Dataset",
    "WindowedDataset",
    "build_dataset",
    "features_from_demo",
    "make_windows",
    "TrainResult",
    "train_bc",
    "StabilityEnvelope",
    "deltas",
    "switching_lambda",
    "e_pqr",
    "confidence_gain_search",
    "LearnerPolicy",
    "RolloutResult",
    "rollout_policy",
    "DaggerConfig",
    "DaggerResult",
    "c_dagger",
]
