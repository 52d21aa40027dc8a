"""Exception types that carry diagnostic payloads."""
from __future__ import annotations


class DisconnectedGraphError(ValueError):
    """Raised when a graph is too fragmented for a path-length measurement.

    Carries the coverage of the largest component and the sorted component
    sizes so the caller can see how the graph fell apart.
    """

    def __init__(self, coverage: float, component_sizes: list[int]):
        self.coverage = coverage
        self.component_sizes = component_sizes
        head = ", ".join(str(s) for s in component_sizes[:8])
        more = ", ..." if len(component_sizes) > 8 else ""
        super().__init__(
            f"largest component covers {coverage:.1%} of nodes (need >= 90%); "
            f"component sizes: [{head}{more}]"
        )


class EventQueueOverflowError(RuntimeError):
    """Raised when a simulation exceeds its event budget.

    Identifies the parameters that drive the event rate so runaway regimes
    can be diagnosed instead of hanging.
    """

    def __init__(self, max_events: int, coupling_strength: float,
                 refractory_fraction: float):
        self.max_events = max_events
        self.coupling_strength = coupling_strength
        self.refractory_fraction = refractory_fraction
        super().__init__(
            f"event queue exceeded {max_events} events; likely runaway regime "
            f"(coupling_strength={coupling_strength}, "
            f"refractory_fraction={refractory_fraction})"
        )


class ConfigError(ValueError):
    """Raised for malformed or unknown experiment-config content."""
