"""Standard-atmosphere density and Mach number.

Smooth (single-branch) fits so the equations of motion stay C-infinity
along trajectories; valid well past the 20,000 ft operating band.
"""

RHO_SEA = 2.377e-3      # slug/ft^3
TEMP_SEA = 519.0        # Rankine
LAPSE = 0.703e-5        # 1/ft
GAMMA_R = 1.4 * 1716.3  # gas constant times ratio of specific heats


def density(alt_ft: float) -> float:
    tfac = 1.0 - LAPSE * alt_ft
    return RHO_SEA * tfac ** 4.14


def density_ratio(alt_ft: float) -> float:
    return density(alt_ft) / RHO_SEA


def mach(vt_fts: float, alt_ft: float) -> float:
    tfac = 1.0 - LAPSE * alt_ft
    return vt_fts / (GAMMA_R * TEMP_SEA * tfac) ** 0.5


def dynamic_pressure(vt_fts: float, alt_ft: float) -> float:
    return 0.5 * density(alt_ft) * vt_fts * vt_fts
