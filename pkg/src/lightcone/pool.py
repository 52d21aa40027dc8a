"""Velocity-limited synchronization pools.

How far apart can two elements sit and still drive each other within one
oscillation period? At signal velocity v and frequency f the answer is
d = v/f, and a planar patch of that diameter holds (d/w)^2 elements of
width w. These few relations set the ceiling on how much hardware a
single oscillation can bind together.
"""
from __future__ import annotations

from dataclasses import dataclass

from .constants import VELOCITY_CEILING

__all__ = [
    "Platform",
    "PoolQuery",
    "PoolResult",
    "pool_diameter",
    "pool_population",
    "pool_area",
    "pool_ratio",
    "max_frequency",
    "is_integrable",
    "describe_pool",
]

_ELEMENT_KINDS = ("neuron", "synapse")


@dataclass(frozen=True)
class Platform:
    """A communication medium paired with an element size.

    ``signal_velocity`` in m/s, capped at light speed (the cap admits the
    conventional rounded value 3e8); ``element_width`` in m;
    ``element_kind`` says whether the width refers to a whole neuron or a
    single synapse, which matters when comparing platforms.
    """

    signal_velocity: float
    element_width: float
    element_kind: str = "neuron"
    label: str = ""

    def __post_init__(self):
        if not 0.0 < self.signal_velocity <= VELOCITY_CEILING:
            raise ValueError(
                f"signal_velocity must be in (0, {VELOCITY_CEILING}] m/s, "
                f"got {self.signal_velocity}"
            )
        if self.element_width <= 0.0:
            raise ValueError(
                f"element_width must be > 0, got {self.element_width}"
            )
        if self.element_kind not in _ELEMENT_KINDS:
            raise ValueError(
                f"element_kind must be one of {_ELEMENT_KINDS}, "
                f"got {self.element_kind!r}"
            )


@dataclass(frozen=True)
class PoolQuery:
    """An oscillation frequency and the spatial dimension of the pool."""

    frequency: float
    dimension: int = 2

    def __post_init__(self):
        if self.frequency <= 0.0:
            raise ValueError(f"frequency must be > 0, got {self.frequency}")
        if self.dimension not in (1, 2, 3):
            raise ValueError(
                f"dimension must be 1, 2 or 3, got {self.dimension}"
            )


@dataclass(frozen=True)
class PoolResult:
    """Pool geometry for one platform and query; area only when planar."""

    diameter: float
    population: float
    area: float | None


def pool_diameter(platform: Platform, frequency: float,
                  round_trip: bool = False) -> float:
    """Maximum pairwise separation integrable at ``frequency``: d = v/f.

    ``round_trip=True`` halves the diameter, modelling the stricter
    requirement that a reply pulse also arrive within the same period.
    The one-way model is the default.
    """
    if frequency <= 0.0:
        raise ValueError(f"frequency must be > 0, got {frequency}")
    d = platform.signal_velocity / frequency
    return 0.5 * d if round_trip else d


def pool_population(platform: Platform, query: PoolQuery,
                    round_trip: bool = False) -> float:
    """Number of elements in the pool: (d / element_width) ** dimension.

    Computed through :func:`pool_diameter` so the compositional identity
    population == (diameter/width)**n holds bit-exactly.
    """
    d = pool_diameter(platform, query.frequency, round_trip)
    return (d / platform.element_width) ** query.dimension


def pool_area(platform: Platform, frequency: float,
              round_trip: bool = False) -> float:
    """Planar pool area under the square convention: area = d**2."""
    d = pool_diameter(platform, frequency, round_trip)
    return d * d


def pool_ratio(photonic: Platform, biological: Platform,
               dimension: int = 2) -> float:
    """Pool population ratio between two platforms of the same element kind.

    (v_a * w_b / (w_a * v_b)) ** n; frequency cancels. Mixing element
    kinds (synapse-sized vs neuron-sized widths) is rejected because the
    ratio is only meaningful like for like.
    """
    if dimension not in (1, 2, 3):
        raise ValueError(f"dimension must be 1, 2 or 3, got {dimension}")
    if photonic.element_kind != biological.element_kind:
        raise ValueError(
            f"element_kind mismatch: {photonic.element_kind!r} vs "
            f"{biological.element_kind!r}"
        )
    base = (photonic.signal_velocity * biological.element_width) / (
        photonic.element_width * biological.signal_velocity
    )
    return base ** dimension


def max_frequency(platform: Platform, extent: float) -> float:
    """Highest frequency whose pool still spans ``extent``: f = v/extent."""
    if extent <= 0.0:
        raise ValueError(f"extent must be > 0, got {extent}")
    return platform.signal_velocity / extent


def is_integrable(platform: Platform, separation: float, frequency: float,
                  round_trip: bool = False) -> bool:
    """True when two elements ``separation`` apart can interact within 1/f.

    The boundary separation == v/f counts as integrable. Evaluated
    against :func:`pool_diameter` so saturation is exact in floating
    point; inverting through :func:`max_frequency` is exact only to
    rounding.
    """
    if separation <= 0.0:
        raise ValueError(f"separation must be > 0, got {separation}")
    return separation <= pool_diameter(platform, frequency, round_trip)


def describe_pool(platform: Platform, query: PoolQuery,
                  round_trip: bool = False) -> PoolResult:
    """Diameter, population and (when planar) area for one query."""
    d = pool_diameter(platform, query.frequency, round_trip)
    population = (d / platform.element_width) ** query.dimension
    area = d * d if query.dimension == 2 else None
    return PoolResult(diameter=d, population=population, area=area)
