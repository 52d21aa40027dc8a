"""Event-driven simulation of spatially embedded pulse-coupled oscillators.

Model
-----
Each node is a phase oscillator with natural period T. Phase advances
linearly in time; on reaching T the node fires, resets to zero, and
emits a spike to every neighbour. A spike emitted by node i at time t
arrives at node j at t + dist(i, j)/v. An arrival landing within the
refractory window (less than refractory_fraction * T after the target's
last fire) is discarded; otherwise it advances the target's phase by
coupling_strength * T, capped at the firing threshold, so an advance
that reaches T fires the target immediately at the arrival time.

Determinism
-----------
Simultaneous events are ordered by (time, source id, sequence number),
and pending natural fires that a phase advance invalidates are skipped
through per-node version counters, so a run is a pure function of its
configuration. The refractory window bounds each node's firing rate by
1/(refractory_fraction * T), which keeps the event count finite.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import EventQueueOverflowError
from .graphs import SampledGraph

__all__ = [
    "SimConfig",
    "SpikeTrace",
    "SynchronyReport",
    "SweepRow",
    "SweepResult",
    "AuditRecord",
    "pairwise_delays",
    "run",
    "synchrony_metrics",
    "pool_sweep",
]

DEFAULT_COUPLING = 0.3
DEFAULT_REFRACTORY = 0.35
DEFAULT_LOCK_THRESHOLD = 0.9
DEFAULT_ANALYSIS_PERIODS = 10
DEFAULT_MAX_EVENTS = 100_000_000

_FIRE = 0
_DELIVER = 1


class AuditRecord(NamedTuple):
    """One event-log entry: a fire, or a delivery with its outcome."""

    kind: str            # "fire" | "delivery"
    time: float
    source: int
    target: int
    emit_time: float     # for deliveries; equals time for fires
    outcome: str         # "fire" | "advance" | "cap_fire" | "refractory"


@dataclass(frozen=True)
class SimConfig:
    """Configuration of one simulation run.

    ``positions`` is an (n, dim) array in metres; ``initial_phases`` are
    per-node phases in seconds within [0, natural_period), drawn from
    ``seed`` when omitted. ``topology`` is "all_to_all" or a SampledGraph
    whose edges carry spikes (delays still follow Euclidean distance).
    coupling_strength = 0 is the uncoupled null control.
    """

    positions: np.ndarray
    signal_velocity: float
    natural_period: float
    duration: float
    coupling_strength: float = DEFAULT_COUPLING
    refractory_fraction: float = DEFAULT_REFRACTORY
    initial_phases: np.ndarray | None = None
    seed: int = 0
    topology: Union[str, SampledGraph] = "all_to_all"
    lock_threshold: float = DEFAULT_LOCK_THRESHOLD
    max_events: int = DEFAULT_MAX_EVENTS
    record_audit: bool = False

    def __post_init__(self):
        pos = np.atleast_2d(np.asarray(self.positions, dtype=float))
        if pos.ndim != 2 or pos.shape[0] < 1 or pos.shape[1] not in (1, 2, 3):
            raise ValueError(
                f"positions must be an (n, dim) array with dim in 1..3, "
                f"got shape {pos.shape}"
            )
        if not np.all(np.isfinite(pos)):
            raise ValueError("positions must be finite")
        object.__setattr__(self, "positions", pos)
        if self.signal_velocity <= 0.0:
            raise ValueError(
                f"signal_velocity must be > 0, got {self.signal_velocity}"
            )
        if self.natural_period <= 0.0:
            raise ValueError(
                f"natural_period must be > 0, got {self.natural_period}"
            )
        if self.duration < self.natural_period:
            raise ValueError(
                f"duration ({self.duration}) must be >= one natural period "
                f"({self.natural_period})"
            )
        if not 0.0 <= self.coupling_strength <= 0.5:
            raise ValueError(
                f"coupling_strength must be in [0, 0.5], "
                f"got {self.coupling_strength}"
            )
        if not 0.0 <= self.refractory_fraction < 0.5:
            raise ValueError(
                f"refractory_fraction must be in [0, 0.5), "
                f"got {self.refractory_fraction}"
            )
        if not 0.0 < self.lock_threshold <= 1.0:
            raise ValueError(
                f"lock_threshold must be in (0, 1], got {self.lock_threshold}"
            )
        if self.max_events < 1:
            raise ValueError(f"max_events must be >= 1, got {self.max_events}")
        n = pos.shape[0]
        if self.initial_phases is not None:
            phases = np.asarray(self.initial_phases, dtype=float)
            if phases.shape != (n,):
                raise ValueError(
                    f"initial_phases must have shape ({n},), "
                    f"got {phases.shape}"
                )
            if np.any(phases < 0.0) or np.any(phases >= self.natural_period):
                raise ValueError(
                    "initial_phases must lie in [0, natural_period)"
                )
            object.__setattr__(self, "initial_phases", phases)
        if isinstance(self.topology, SampledGraph):
            if self.topology.n_nodes != n:
                raise ValueError(
                    f"topology has {self.topology.n_nodes} nodes, "
                    f"positions have {n}"
                )
        elif self.topology != "all_to_all":
            raise ValueError(
                f'topology must be "all_to_all" or a SampledGraph, '
                f"got {self.topology!r}"
            )

    @property
    def n_nodes(self) -> int:
        return self.positions.shape[0]

    def resolved_phases(self) -> np.ndarray:
        """Initial phases, drawing from the seed when not given."""
        if self.initial_phases is not None:
            return self.initial_phases
        rng = np.random.default_rng(self.seed)
        return rng.uniform(0.0, self.natural_period, size=self.n_nodes)


@dataclass(frozen=True)
class SpikeTrace:
    """All fires of one run, in event order."""

    times: np.ndarray
    nodes: np.ndarray
    n_nodes: int
    natural_period: float
    duration: float
    n_events: int
    audit: tuple[AuditRecord, ...] | None = None

    def node_fire_times(self, node: int) -> np.ndarray:
        return self.times[self.nodes == node]

    def in_window(self, t0: float, t1: float) -> tuple[np.ndarray, np.ndarray]:
        mask = (self.times >= t0) & (self.times <= t1)
        return self.times[mask], self.nodes[mask]


@dataclass(frozen=True)
class SynchronyReport:
    """Phase coherence of a trace over a trailing analysis window."""

    order_parameter: float
    locked: bool
    lock_threshold: float
    per_node_phase: np.ndarray
    convergence_time: float | None
    n_spikes: int


@dataclass(frozen=True)
class SweepRow:
    """Aggregated order parameter for one pool diameter."""

    diameter_over_vt: float
    mean_order_parameter: float
    stderr: float
    order_parameters: tuple[float, ...]


@dataclass(frozen=True)
class SweepResult:
    """Sweep table plus the parameters the cells shared."""

    rows: tuple[SweepRow, ...]
    n_nodes: int
    signal_velocity: float
    natural_period: float
    coupling_strength: float
    lock_threshold: float
    seeds: tuple[int, ...]


def pairwise_delays(positions: np.ndarray, signal_velocity: float) -> np.ndarray:
    """Propagation delay matrix dist(i, j) / v; shared with the tests."""
    pos = np.atleast_2d(np.asarray(positions, dtype=float))
    diff = pos[:, None, :] - pos[None, :, :]
    return np.sqrt((diff ** 2).sum(axis=-1)) / signal_velocity


def _neighbours(config: SimConfig) -> list[np.ndarray]:
    n = config.n_nodes
    if isinstance(config.topology, SampledGraph):
        adj = config.topology.adjacency
        return [adj.indices[adj.indptr[i]:adj.indptr[i + 1]].astype(np.int64)
                for i in range(n)]
    everyone = np.arange(n, dtype=np.int64)
    return [np.delete(everyone, i) for i in range(n)]


def run(config: SimConfig) -> SpikeTrace:
    """Run one simulation and return its spike trace.

    Deterministic given the configuration (including the seed that fills
    in unspecified initial phases). Raises EventQueueOverflowError when
    the event budget is exhausted.
    """
    n = config.n_nodes
    T = config.natural_period
    eps_dt = config.coupling_strength * T
    refractory = config.refractory_fraction * T
    duration = config.duration
    delays = pairwise_delays(config.positions, config.signal_velocity)
    neighbours = _neighbours(config)
    phases = config.resolved_phases()

    # phi_i(t) = t - origin[i]; the pending natural fire sits at origin + T.
    origin = [-float(p) for p in phases]
    last_fire = [-math.inf] * n
    version = [0] * n
    audit: list[AuditRecord] | None = [] if config.record_audit else None

    heap: list[tuple[float, int, int, int, int, int]] = []
    seq = 0
    for i in range(n):
        heap.append((origin[i] + T, i, seq, _FIRE, i, 0))
        seq += 1
    heapq.heapify(heap)

    fire_times: list[float] = []
    fire_nodes: list[int] = []
    pops = 0
    max_events = config.max_events
    # With zero coupling a delivery can never change any state, so the
    # (identical) trace is produced without scheduling deliveries at all.
    couple = eps_dt > 0.0

    def fire(i: int, t: float, natural: bool = True) -> None:
        nonlocal seq
        fire_times.append(t)
        fire_nodes.append(i)
        if audit is not None and natural:
            # Cap-induced fires are already logged by their delivery record.
            audit.append(AuditRecord("fire", t, i, i, t, "fire"))
        last_fire[i] = t
        origin[i] = t
        version[i] += 1
        heapq.heappush(heap, (t + T, i, seq, _FIRE, i, version[i]))
        seq += 1
        if couple:
            row = delays[i]
            for j in neighbours[i]:
                heapq.heappush(heap, (t + row[j], i, seq, _DELIVER, int(j), t))
                seq += 1

    while heap:
        # The last slot holds the fire version for _FIRE events and the
        # exact emit time for _DELIVER events; seq uniqueness keeps tuple
        # comparison from ever reaching it.
        t, src, _, kind, target, extra = heapq.heappop(heap)
        if t > duration:
            break
        pops += 1
        if pops > max_events:
            raise EventQueueOverflowError(
                max_events, config.coupling_strength,
                config.refractory_fraction,
            )
        if kind == _FIRE:
            if extra != version[target]:
                continue  # superseded by a phase advance or induced fire
            fire(target, t)
            continue
        emit = extra
        if t - last_fire[target] < refractory:
            if audit is not None:
                audit.append(
                    AuditRecord("delivery", t, src, target, emit, "refractory")
                )
            continue
        phi = t - origin[target]
        advanced = phi + eps_dt
        if advanced >= T:
            if audit is not None:
                audit.append(
                    AuditRecord("delivery", t, src, target, emit, "cap_fire")
                )
            fire(target, t, natural=False)
        else:
            origin[target] = t - advanced
            version[target] += 1
            heapq.heappush(
                heap, (origin[target] + T, target, seq, _FIRE, target,
                       version[target])
            )
            seq += 1
            if audit is not None:
                audit.append(
                    AuditRecord("delivery", t, src, target, emit, "advance")
                )

    return SpikeTrace(
        times=np.asarray(fire_times, dtype=float),
        nodes=np.asarray(fire_nodes, dtype=np.int64),
        n_nodes=n,
        natural_period=T,
        duration=duration,
        n_events=pops,
        audit=tuple(audit) if audit is not None else None,
    )


def _order_parameter(times: np.ndarray, period: float) -> float:
    angles = 2.0 * np.pi * ((times % period) / period)
    return float(abs(np.exp(1j * angles).mean()))


def synchrony_metrics(trace: SpikeTrace, period: float | None = None,
                      window: float | None = None,
                      lock_threshold: float = DEFAULT_LOCK_THRESHOLD
                      ) -> SynchronyReport:
    """Phase coherence of the trailing ``window`` of a trace.

    The order parameter is the magnitude of the circular mean of fire
    times modulo ``period`` (defaults: the trace's natural period; a
    window of ten periods). ``convergence_time`` is the start of the
    earliest period from which every subsequent one-period window stays
    at or above the lock threshold, or None if none does.

    Raises ValueError when the window exceeds the trace duration or
    contains no spikes.
    """
    if period is None:
        period = trace.natural_period
    if period <= 0.0:
        raise ValueError(f"period must be > 0, got {period}")
    if window is None:
        window = DEFAULT_ANALYSIS_PERIODS * period
    if window <= 0.0 or window > trace.duration:
        raise ValueError(
            f"window must lie in (0, duration={trace.duration}], got {window}"
        )
    t0 = trace.duration - window
    times, nodes = trace.in_window(t0, trace.duration)
    if len(times) == 0:
        raise ValueError(
            f"no spikes in the analysis window [{t0}, {trace.duration}]"
        )
    order = _order_parameter(times, period)

    per_node = np.full(trace.n_nodes, np.nan)
    for i in range(trace.n_nodes):
        own = times[nodes == i]
        if len(own):
            angles = 2.0 * np.pi * ((own % period) / period)
            mean_angle = np.angle(np.exp(1j * angles).mean())
            per_node[i] = (mean_angle / (2.0 * np.pi)) % 1.0 * period

    n_periods = int(trace.duration / period)
    converged_from: float | None = None
    for k in range(n_periods):
        w0, w1 = k * period, (k + 1) * period
        wt = trace.times[(trace.times >= w0) & (trace.times < w1)]
        ok = len(wt) > 0 and _order_parameter(wt, period) >= lock_threshold
        if ok and converged_from is None:
            converged_from = w0
        elif not ok:
            converged_from = None

    return SynchronyReport(
        order_parameter=order,
        locked=order >= lock_threshold,
        lock_threshold=lock_threshold,
        per_node_phase=per_node,
        convergence_time=converged_from,
        n_spikes=len(times),
    )


def pool_sweep(base: SimConfig, diameters: list[float],
               seeds: list[int]) -> SweepResult:
    """Order parameter versus pool diameter, averaged over seeds.

    For each (diameter, seed) cell the nodes are placed uniformly at
    random in a square of side ``diameter`` (metres) and run with the
    base configuration's dynamics. Per seed, the unit-square placement
    and the initial phases are drawn once and shared by every diameter
    (the diameter only rescales the geometry), so the zero-coupling null
    control is exactly diameter-independent. Cells are independent and
    aggregated by cell key, so the table does not depend on evaluation
    order.
    """
    if len(diameters) < 1:
        raise ValueError("at least one diameter is required")
    if len(seeds) < 1:
        raise ValueError("at least one seed is required")
    n = base.n_nodes
    T = base.natural_period
    vt = base.signal_velocity * T
    window = min(DEFAULT_ANALYSIS_PERIODS * T, base.duration)

    placements = {}
    for seed in seeds:
        rng = np.random.default_rng(seed)
        unit = rng.uniform(0.0, 1.0, size=(n, 2))
        phases = rng.uniform(0.0, T, size=n)
        placements[seed] = (unit, phases)

    rows = []
    for diameter in diameters:
        if diameter <= 0.0:
            raise ValueError(f"diameters must be > 0, got {diameter}")
        values = []
        for seed in seeds:
            unit, phases = placements[seed]
            config = SimConfig(
                positions=unit * diameter,
                signal_velocity=base.signal_velocity,
                natural_period=T,
                duration=base.duration,
                coupling_strength=base.coupling_strength,
                refractory_fraction=base.refractory_fraction,
                initial_phases=phases,
                seed=seed,
                topology=base.topology,
                lock_threshold=base.lock_threshold,
                max_events=base.max_events,
            )
            trace = run(config)
            report = synchrony_metrics(trace, period=T, window=window,
                                       lock_threshold=base.lock_threshold)
            values.append(report.order_parameter)
        arr = np.asarray(values)
        stderr = float(arr.std(ddof=1) / math.sqrt(len(arr))) if len(arr) > 1 else 0.0
        rows.append(SweepRow(
            diameter_over_vt=diameter / vt,
            mean_order_parameter=float(arr.mean()),
            stderr=stderr,
            order_parameters=tuple(float(v) for v in arr),
        ))

    return SweepResult(
        rows=tuple(rows),
        n_nodes=n,
        signal_velocity=base.signal_velocity,
        natural_period=T,
        coupling_strength=base.coupling_strength,
        lock_threshold=base.lock_threshold,
        seeds=tuple(int(s) for s in seeds),
    )
