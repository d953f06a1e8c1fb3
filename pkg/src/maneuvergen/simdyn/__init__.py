from .types import AircraftState, ControlInput, SurfaceState
from .params import AircraftParams, PerturbationSpec, default_params, perturb
from .actuators import clamp_and_rate_limit
from .aero import aero_coefficients
from .eom import state_derivative, step
from .trim import trim

__all__ = [
    "AircraftState",
    "ControlInput",
    "SurfaceState",
    "AircraftParams",
    "PerturbationSpec",
    "default_params",
    "perturb",
    "clamp_and_rate_limit",
    "aero_coefficients",
    "state_derivative",
    "step",
    "trim",
]
