"""Physical and mathematical constants, pinned for bit-reproducible output."""

SPEED_OF_LIGHT = 2.99792458e8
"""Vacuum light speed in m/s."""

VELOCITY_CEILING = 3.0e8
"""Upper bound accepted for signal velocities, m/s. Slightly above the
exact light speed so the conventional rounded value 3e8 is admitted."""

PLANCK = 6.62607015e-34
"""Planck constant in J*s (2019 SI exact value)."""

EULER_GAMMA = 0.5772156649
"""Euler-Mascheroni constant, to the precision used by the degree formula."""

EARTH_SURFACE_AREA = 5.1e14
"""Surface area of the earth in m^2, used for feasibility reporting."""

THETA_BAND_HZ = (4.0, 8.0)
"""Frequency band of cortex-wide oscillations, for feasibility reporting."""
