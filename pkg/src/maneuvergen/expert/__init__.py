from .profiles import ReferenceProfile, ProfileShapes, reference_profile
from .ndi import NdiGains, ndi_action
from .rollout import Demonstration, run_expert

__all__ = [
    "ReferenceProfile",
    "ProfileShapes",
    "reference_profile",
    "NdiGains",
    "ndi_action",
    "Demonstration",
    "run_expert",
]
