"""Engine model: linear power command, first-order power lag, smooth thrust.

Thrust at full power scales with the atmospheric density ratio and grows
mildly with Mach; all branches are smooth so fixed-step RK4 retains its
order through throttle transients.
"""

from .atmosphere import density_ratio, mach
from .params import AircraftParams


def power_command(throttle: float) -> float:
    """Map throttle fraction 0..1 to commanded power percent 0..100."""
    return 100.0 * throttle


def power_rate(power: float, throttle: float, params: AircraftParams) -> float:
    """First-order lag of the power state toward the commanded power."""
    return (power_command(throttle) - power) / params.engine_tau_s


def thrust(power: float, vt_fts: float, alt_ft: float, params: AircraftParams) -> float:
    m = mach(vt_fts, alt_ft)
    scale = params.thrust_static_lb * density_ratio(alt_ft) ** params.thrust_density_exp
    return (power / 100.0) * scale * (1.0 + params.thrust_mach_gain * m * m)
