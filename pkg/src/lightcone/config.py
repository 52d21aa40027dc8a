"""Experiment configuration files: a schema-versioned JSON document.

All quantities are SI. Unknown top-level sections and unknown keys inside
a section are rejected rather than ignored, so typos fail loudly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .hardware import HardwareProfile
from .sim import (
    DEFAULT_COUPLING,
    DEFAULT_LOCK_THRESHOLD,
    DEFAULT_MAX_EVENTS,
    DEFAULT_REFRACTORY,
    SimConfig,
)

SCHEMA_VERSION = 1

_SECTION_KEYS = {
    "hardware": {
        "synapse_area_m2",
        "neuron_base_area_m2",
        "routing_overhead_fraction",
        "wafer_diameter_m",
        "wavelength_m",
        "photons_per_synapse_event",
        "source_efficiency",
        "cooling_overhead",
    },
    "simulation": {
        "n_nodes",
        "side_m",
        "positions_m",
        "signal_velocity_m_per_s",
        "natural_period_s",
        "coupling_strength",
        "refractory_fraction",
        "initial_phases_s",
        "duration_s",
        "seed",
        "lock_threshold",
        "max_events",
    },
    "sweep": {
        "diameters_over_vt",
        "seeds",
    },
    "pool": {
        "signal_velocity_m_per_s",
        "element_width_m",
        "element_kind",
        "dimension",
        "frequencies_hz",
    },
    "graph": {
        "n_values",
        "path_lengths",
        "alphas",
        "k_min",
        "k_max",
    },
}
_TOP_KEYS = {"schema_version"} | set(_SECTION_KEYS)


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment file; absent sections are empty dicts."""

    schema_version: int
    hardware: dict = field(default_factory=dict)
    simulation: dict = field(default_factory=dict)
    sweep: dict = field(default_factory=dict)
    pool: dict = field(default_factory=dict)
    graph: dict = field(default_factory=dict)


def load_experiment_config(path: str | Path) -> ExperimentConfig:
    """Load and validate a config file; raise ConfigError on any defect."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")

    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise ConfigError(
            f"unknown top-level keys: {sorted(unknown)}; "
            f"allowed: {sorted(_TOP_KEYS)}"
        )
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ConfigError(
            f"schema_version must be {SCHEMA_VERSION}, got {version!r}"
        )
    sections = {}
    for name, allowed in _SECTION_KEYS.items():
        section = raw.get(name, {})
        if not isinstance(section, dict):
            raise ConfigError(f"section {name!r} must be a JSON object")
        bad = set(section) - allowed
        if bad:
            raise ConfigError(
                f"unknown keys in section {name!r}: {sorted(bad)}; "
                f"allowed: {sorted(allowed)}"
            )
        sections[name] = section
    return ExperimentConfig(schema_version=version, **sections)


def build_hardware_profile(config: ExperimentConfig) -> HardwareProfile:
    """Hardware profile from the config, defaulting to the wafer profile."""
    base = HardwareProfile.wafer_300mm()
    section = config.hardware
    return HardwareProfile(
        synapse_area=section.get("synapse_area_m2", base.synapse_area),
        neuron_base_area=section.get(
            "neuron_base_area_m2", base.neuron_base_area
        ),
        routing_overhead_fraction=section.get(
            "routing_overhead_fraction", base.routing_overhead_fraction
        ),
        wafer_diameter=section.get("wafer_diameter_m", base.wafer_diameter),
        wavelength=section.get("wavelength_m", base.wavelength),
        photons_per_synapse_event=section.get(
            "photons_per_synapse_event", base.photons_per_synapse_event
        ),
        source_efficiency=section.get(
            "source_efficiency", base.source_efficiency
        ),
        cooling_overhead=section.get(
            "cooling_overhead", base.cooling_overhead
        ),
    )


def build_sim_config(config: ExperimentConfig,
                     seed_override: int | None = None) -> SimConfig:
    """Simulation setup from the config's ``simulation`` section.

    Positions come either from ``positions_m`` directly or from
    ``n_nodes`` plus ``side_m`` (uniform placement in a square, drawn
    from the seed).
    """
    section = config.simulation
    if not section:
        raise ConfigError('config has no "simulation" section')
    for key in ("signal_velocity_m_per_s", "natural_period_s", "duration_s"):
        if key not in section:
            raise ConfigError(f'simulation section is missing "{key}"')
    seed = seed_override if seed_override is not None else section.get("seed", 0)
    if "positions_m" in section:
        positions = np.asarray(section["positions_m"], dtype=float)
    elif "n_nodes" in section and "side_m" in section:
        rng = np.random.default_rng(seed)
        positions = rng.uniform(
            0.0, float(section["side_m"]),
            size=(int(section["n_nodes"]), 2),
        )
    else:
        raise ConfigError(
            'simulation section needs "positions_m" or both '
            '"n_nodes" and "side_m"'
        )
    phases = section.get("initial_phases_s")
    if phases is not None:
        phases = np.asarray(phases, dtype=float)
    try:
        return SimConfig(
            positions=positions,
            signal_velocity=float(section["signal_velocity_m_per_s"]),
            natural_period=float(section["natural_period_s"]),
            duration=float(section["duration_s"]),
            coupling_strength=float(
                section.get("coupling_strength", DEFAULT_COUPLING)
            ),
            refractory_fraction=float(
                section.get("refractory_fraction", DEFAULT_REFRACTORY)
            ),
            initial_phases=phases,
            seed=int(seed),
            lock_threshold=float(
                section.get("lock_threshold", DEFAULT_LOCK_THRESHOLD)
            ),
            max_events=int(section.get("max_events", DEFAULT_MAX_EVENTS)),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid simulation parameters: {exc}") from exc
