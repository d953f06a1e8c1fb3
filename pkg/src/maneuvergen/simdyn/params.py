"""Aircraft physical parameters and multiplicative perturbations."""

import dataclasses
import hashlib
import json
from dataclasses import dataclass

import yaml


@dataclass(frozen=True, slots=True)
class AircraftParams:
    """Physical constants for an F-16-class airframe.

    Units: slug, slug-ft^2, ft, ft/s^2.  cg locations are fractions of the
    mean aerodynamic chord.  Actuator time constants in seconds; surface
    rate limits in deg/s, throttle rate limit in fraction/s.
    """

    mass: float = 636.0                 # slug
    Ixx: float = 9496.0                 # slug-ft^2
    Iyy: float = 55814.0
    Izz: float = 63100.0
    Ixz: float = 982.0
    wing_area: float = 300.0            # ft^2
    wing_span: float = 30.0             # ft
    chord: float = 11.32                # ft, mean aerodynamic chord
    xcg: float = 0.35                   # cg location, fraction chord
    xcg_ref: float = 0.35               # aero-data reference cg
    # Engine: zero-lag linear power command, first-order power lag, smooth
    # thrust scaling with density ratio and Mach.
    engine_tau_s: float = 0.5           # power lag time constant
    thrust_static_lb: float = 20000.0   # full-power sea-level static thrust
    thrust_density_exp: float = 0.8     # thrust ~ sigma^exp
    thrust_mach_gain: float = 0.2       # thrust ~ (1 + gain * M^2)
    engine_momentum: float = 0.0        # slug-ft^2/s, kept 0 for lateral symmetry
    # Actuators
    surface_tau_s: float = 0.0495
    throttle_tau_s: float = 1.0
    surface_rate_dps: float = 60.0
    throttle_rate_ps: float = 1.0
    # Environment
    gravity: float = 32.17              # ft/s^2
    # Uniform scale on all aerodynamic force/moment coefficients.
    aero_scale: float = 1.0

    def validate(self):
        if self.mass <= 0.0:
            raise ValueError("mass must be positive")
        # positive-definite inertia tensor (symmetric with single Ixz product)
        if self.Ixx <= 0.0 or self.Iyy <= 0.0 or self.Izz <= 0.0:
            raise ValueError("principal inertias must be positive")
        if self.Ixx * self.Izz - self.Ixz ** 2 <= 0.0:
            raise ValueError("inertia matrix must be positive definite")
        return self

    def ident(self):
        """Stable short id of the parameter set, for provenance records."""
        blob = json.dumps(dataclasses.asdict(self), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass(frozen=True, slots=True)
class PerturbationSpec:
    """Multiplicative factors per parameter group; 1.0 leaves a group alone.

    ``actuator`` scales the surface/throttle rate limits only; magnitude
    limits are a hard contract and never scale.
    """

    mass: float = 1.0
    inertia: float = 1.0
    aero: float = 1.0
    actuator: float = 1.0

    def validate(self):
        for name in ("mass", "inertia", "aero", "actuator"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"perturbation factor {name} must be > 0")
        return self


def default_params() -> AircraftParams:
    return AircraftParams().validate()


def perturb(params: AircraftParams, spec: PerturbationSpec) -> AircraftParams:
    """Apply a PerturbationSpec, returning new params (input untouched)."""
    spec.validate()
    return dataclasses.replace(
        params,
        mass=params.mass * spec.mass,
        Ixx=params.Ixx * spec.inertia,
        Iyy=params.Iyy * spec.inertia,
        Izz=params.Izz * spec.inertia,
        Ixz=params.Ixz * spec.inertia,
        aero_scale=params.aero_scale * spec.aero,
        surface_rate_dps=params.surface_rate_dps * spec.actuator,
        throttle_rate_ps=params.throttle_rate_ps * spec.actuator,
    ).validate()


def save_params(params: AircraftParams, path):
    """Write a parameter set as a human-readable key/value file."""
    with open(path, "w") as fh:
        yaml.safe_dump(dataclasses.asdict(params), fh, sort_keys=True)


def load_params(path) -> AircraftParams:
    with open(path) as fh:
        data = yaml.safe_load(fh)
    return AircraftParams(**data).validate()
