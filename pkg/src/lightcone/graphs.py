"""Degree statistics and path lengths for random and scale-free networks.

Analytic operations treat degrees as real-valued. Sampling operations
produce integer degree sequences (floor plus stochastic remainder) and
cleaned-up undirected graphs (no self-loops, no parallel edges), which
serve as the empirical counterpart of the closed-form relations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components, dijkstra

from .constants import EULER_GAMMA
from .errors import DisconnectedGraphError

__all__ = [
    "RandomGaussian",
    "PowerLaw",
    "DegreeDistribution",
    "SampledGraph",
    "PathLengthResult",
    "avg_degree_random",
    "path_length_random",
    "powerlaw_cutoff",
    "powerlaw_mean_degree",
    "powerlaw_max_degree",
    "sample_powerlaw_degrees",
    "sample_graph",
    "measure_avg_path_length",
]

# BFS from every node below this size; sampled sources above.
EXACT_SOURCE_LIMIT = 20_000
DEFAULT_SOURCE_SAMPLE = 256
# The largest component must hold at least this fraction of all nodes.
MIN_COVERAGE = 0.90
# Memory guard for samplers: total expected stub/edge count.
MAX_STUBS = 200_000_000


@dataclass(frozen=True)
class RandomGaussian:
    """Random-network degree law, parameterized by size and path length.

    The implied average degree is ``avg_degree_random(n_total,
    avg_path_length)``; sampling realizes it as a G(n, p) graph.
    """

    n_total: int
    avg_path_length: float

    def __post_init__(self):
        if self.n_total < 2:
            raise ValueError(f"n_total must be >= 2, got {self.n_total}")
        if self.avg_path_length < 1.0:
            raise ValueError(
                f"avg_path_length must be >= 1, got {self.avg_path_length}"
            )


@dataclass(frozen=True)
class PowerLaw:
    """Power-law degree distribution p(k) proportional to k**(-alpha).

    ``k_max=None`` selects the natural cutoff ``k_min * n**(1/(alpha-1))``,
    the largest degree expected once in an n-node sample; an explicit
    ``k_max`` truncates the law there instead.
    """

    alpha: float
    k_min: float = 1.0
    k_max: float | None = None

    def __post_init__(self):
        if not 1.0 < self.alpha <= 4.0:
            raise ValueError(
                f"alpha must be in (1, 4], got {self.alpha}"
            )
        if self.k_min < 1.0:
            raise ValueError(f"k_min must be >= 1, got {self.k_min}")
        if self.k_max is not None and self.k_max < self.k_min:
            raise ValueError(
                f"k_max ({self.k_max}) must be >= k_min ({self.k_min})"
            )


DegreeDistribution = Union[RandomGaussian, PowerLaw]


@dataclass
class SampledGraph:
    """Undirected graph realized from a degree distribution.

    ``adjacency`` is a symmetric CSR matrix with unit weights, no
    self-loops, node ids dense in [0, n_nodes). ``target_degrees`` keeps
    the drawn (pre-cleanup) degree sequence for power-law samples.
    """

    n_nodes: int
    adjacency: sp.csr_matrix
    seed: int
    target_degrees: np.ndarray | None = None

    @property
    def degrees(self) -> np.ndarray:
        return np.asarray(self.adjacency.sum(axis=1)).ravel().astype(np.int64)

    @property
    def n_edges(self) -> int:
        return int(self.adjacency.nnz // 2)

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of edges with i < j, sorted; stable across runs."""
        coo = sp.triu(self.adjacency, k=1).tocoo()
        edges = np.stack([coo.row, coo.col], axis=1)
        order = np.lexsort((edges[:, 1], edges[:, 0]))
        return edges[order]


@dataclass(frozen=True)
class PathLengthResult:
    """Average shortest-path length of the largest component.

    ``stderr`` is None for the exact (all-sources) measurement and the
    standard error of the per-source means otherwise.
    """

    mean: float
    stderr: float | None
    coverage: float
    component_size: int
    n_sources: int
    exact: bool


def avg_degree_random(n_total: float, avg_path_length: float) -> float:
    """Average degree a random network needs for a given path length.

    Evaluates k = exp[(ln(n) - gamma)/L + 1/2], with gamma the
    Euler-Mascheroni constant: the mean degree at which a random
    (Gaussian-degree) network of ``n_total`` nodes attains average
    shortest-path length ``avg_path_length``.
    """
    if n_total < 2:
        raise ValueError(f"n_total must be >= 2, got {n_total}")
    if avg_path_length < 1.0:
        raise ValueError(f"avg_path_length must be >= 1, got {avg_path_length}")
    return math.exp((math.log(n_total) - EULER_GAMMA) / avg_path_length + 0.5)


def path_length_random(n_total: float, avg_degree: float) -> float:
    """Path length of a random network at a given average degree.

    Exact algebraic inverse of :func:`avg_degree_random`:
    L = (ln(n) - gamma) / (ln(k) - 1/2). Requires ln(k) > 1/2.
    """
    if n_total < 2:
        raise ValueError(f"n_total must be >= 2, got {n_total}")
    if avg_degree <= 0 or math.log(avg_degree) <= 0.5:
        raise ValueError(
            f"avg_degree must exceed exp(1/2) ~ 1.6487, got {avg_degree}"
        )
    return (math.log(n_total) - EULER_GAMMA) / (math.log(avg_degree) - 0.5)


def powerlaw_cutoff(dist: PowerLaw, n_total: float) -> float:
    """Upper degree cutoff: explicit if set, else the natural cutoff."""
    if dist.k_max is not None:
        return float(dist.k_max)
    return dist.k_min * float(n_total) ** (1.0 / (dist.alpha - 1.0))


def powerlaw_mean_degree(dist: PowerLaw, n_total: float) -> float:
    """Mean degree of the continuous truncated power law.

    Integrates k * p(k) over [k_min, k_max] with p(k) = C k**(-alpha)
    normalized on the same interval. alpha = 2 makes the first-moment
    integral logarithmic and is handled by its exact closed form rather
    than a numerical limit.
    """
    if n_total < 2:
        raise ValueError(f"n_total must be >= 2, got {n_total}")
    a = dist.alpha
    lo = float(dist.k_min)
    hi = powerlaw_cutoff(dist, n_total)
    if hi <= lo:
        return lo
    if abs(a - 2.0) < 1e-12:
        return math.log(hi / lo) / (1.0 / lo - 1.0 / hi)
    first = (hi ** (2.0 - a) - lo ** (2.0 - a)) / (2.0 - a)
    norm = (hi ** (1.0 - a) - lo ** (1.0 - a)) / (1.0 - a)
    return first / norm


def powerlaw_max_degree(dist: PowerLaw, n_total: float) -> float:
    """Expected maximum degree among n_total nodes.

    The natural cutoff k_min * n**(1/(alpha-1)) leaves one node expected
    beyond it; an explicit truncation can only lower the maximum.
    """
    if n_total < 2:
        raise ValueError(f"n_total must be >= 2, got {n_total}")
    natural = dist.k_min * float(n_total) ** (1.0 / (dist.alpha - 1.0))
    if dist.k_max is not None:
        return min(float(dist.k_max), natural)
    return natural


def sample_powerlaw_degrees(dist: PowerLaw, n_total: int,
                            rng: np.random.Generator) -> np.ndarray:
    """Integer-valued degree sequence drawn from the truncated power law.

    Inverse-CDF samples of the continuous law, rounded by floor plus a
    stochastic remainder so the expectation is preserved. Returned as
    float64 holding integer values; heavy tails can exceed the int64
    range, so callers convert only after checking feasibility.
    """
    a = dist.alpha
    lo = float(dist.k_min)
    hi = powerlaw_cutoff(dist, n_total)
    e = 1.0 - a
    u = rng.random(n_total)
    raw = (lo ** e + u * (hi ** e - lo ** e)) ** (1.0 / e)
    floor = np.floor(raw)
    return floor + (rng.random(n_total) < (raw - floor))


def _er_edge_list(n: int, p: float,
                  rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """G(n, p) edges by geometric skipping over the upper-triangle pairs."""
    n_pairs = n * (n - 1) // 2
    if p <= 0.0 or n_pairs == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    logq = math.log1p(-p)
    picks = []
    cur = -1
    while True:
        # Chunk size with slack so one pass usually suffices.
        m = max(1024, int(1.2 * p * (n_pairs - cur)) + 16)
        u = rng.random(m)
        skips = np.floor(np.log(u) / logq).astype(np.int64) + 1
        idx = cur + np.cumsum(skips)
        take = idx[idx < n_pairs]
        picks.append(take)
        if len(take) < len(idx):
            break
        cur = int(idx[-1])
    lin = np.concatenate(picks)
    row_counts = np.arange(n - 1, 0, -1, dtype=np.int64)
    row_ends = np.cumsum(row_counts)
    i = np.searchsorted(row_ends, lin, side="right")
    row_start = row_ends[i] - row_counts[i]
    j = i + 1 + (lin - row_start)
    return i.astype(np.int64), j.astype(np.int64)


def _configuration_edges(degrees: np.ndarray,
                         rng: np.random.Generator
                         ) -> tuple[np.ndarray, np.ndarray]:
    """Stub matching followed by self-loop and multi-edge cleanup."""
    stubs = np.repeat(np.arange(len(degrees), dtype=np.int64), degrees)
    rng.shuffle(stubs)
    a, b = stubs[0::2], stubs[1::2]
    keep = a != b
    a, b = a[keep], b[keep]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    pairs = np.unique(np.stack([lo, hi], axis=1), axis=0)
    return pairs[:, 0], pairs[:, 1]


def sample_graph(dist: DegreeDistribution, n_total: int, seed: int) -> SampledGraph:
    """Realize a graph from a degree distribution, reproducibly.

    RandomGaussian becomes a G(n, p) graph with p = k/(n-1) for the degree
    implied by the distribution's own (n_total, avg_path_length) pair.
    PowerLaw becomes a configuration-model graph from a sampled degree
    sequence (total degree adjusted to even parity), with self-loops and
    parallel edges removed afterwards.

    Raises ValueError for infeasible sequences (a degree >= n_total) and
    for samples beyond the memory budget (~2e8 expected stubs).
    """
    if n_total < 2:
        raise ValueError(f"n_total must be >= 2, got {n_total}")
    rng = np.random.default_rng(seed)
    target: np.ndarray | None = None
    if isinstance(dist, RandomGaussian):
        kbar = avg_degree_random(dist.n_total, dist.avg_path_length)
        if kbar >= n_total:
            raise ValueError(
                f"infeasible degree: target mean degree {kbar:.1f} >= "
                f"n_total {n_total}"
            )
        if kbar * n_total > MAX_STUBS:
            raise ValueError(
                f"sample exceeds memory budget: n*k = {kbar * n_total:.3g} "
                f"> {MAX_STUBS}"
            )
        p = kbar / (n_total - 1)
        rows, cols = _er_edge_list(n_total, p, rng)
    elif isinstance(dist, PowerLaw):
        raw = sample_powerlaw_degrees(dist, n_total, rng)
        if float(raw.max()) >= n_total:
            raise ValueError(
                f"infeasible degree sequence: max degree {raw.max():.0f} "
                f">= n_total {n_total}"
            )
        if float(raw.sum()) > MAX_STUBS:
            raise ValueError(
                f"sample exceeds memory budget: sum of degrees "
                f"{raw.sum():.3g} > {MAX_STUBS}"
            )
        degrees = raw.astype(np.int64)
        if degrees.sum() % 2 == 1:
            bump = int(rng.integers(n_total))
            degrees[bump] += 1
            if degrees[bump] >= n_total:
                degrees[bump] -= 2
        target = degrees
        rows, cols = _configuration_edges(degrees, rng)
    else:
        raise TypeError(f"unsupported distribution type: {type(dist)!r}")

    data = np.ones(2 * len(rows))
    adjacency = sp.csr_matrix(
        (data, (np.concatenate([rows, cols]), np.concatenate([cols, rows]))),
        shape=(n_total, n_total),
    )
    adjacency.data[:] = 1.0  # collapse any duplicate accumulation
    return SampledGraph(n_nodes=n_total, adjacency=adjacency, seed=seed,
                        target_degrees=target)


def measure_avg_path_length(graph: SampledGraph,
                            source_sample: int | str | None = None
                            ) -> PathLengthResult:
    """Measure the average shortest-path length via per-source BFS.

    Runs on the largest connected component only; raises
    DisconnectedGraphError when that component covers less than 90% of the
    nodes. ``source_sample`` may be "all" (exact mean over all ordered
    pairs), an integer source count (estimate with standard error), or
    None for the size-based default (exact up to 20k nodes, 256 sources
    above). Sources are taken at fixed evenly spaced positions in the
    component so repeated measurements agree.
    """
    n = graph.n_nodes
    if n < 2:
        raise DisconnectedGraphError(0.0, [n] if n else [])
    ncomp, labels = connected_components(graph.adjacency, directed=False)
    counts = np.bincount(labels)
    giant = int(np.argmax(counts))
    size = int(counts[giant])
    coverage = size / n
    if coverage < MIN_COVERAGE or size < 2:
        raise DisconnectedGraphError(
            coverage, sorted((int(c) for c in counts), reverse=True)
        )
    nodes = np.where(labels == giant)[0]

    if source_sample is None:
        source_sample = "all" if size <= EXACT_SOURCE_LIMIT else DEFAULT_SOURCE_SAMPLE
    if source_sample == "all":
        sources = nodes
        exact = True
    else:
        k = min(int(source_sample), size)
        if k < 1:
            raise ValueError("source_sample must be >= 1")
        sources = nodes[np.linspace(0, size - 1, k).astype(np.int64)]
        sources = np.unique(sources)
        exact = len(sources) == size

    per_source = np.empty(len(sources))
    chunk = 256
    for start in range(0, len(sources), chunk):
        batch = sources[start:start + chunk]
        dist = dijkstra(graph.adjacency, unweighted=True, indices=batch)
        dist = dist[:, nodes]
        # Every target in the component is reachable; drop the source itself.
        per_source[start:start + len(batch)] = (
            dist.sum(axis=1) / (size - 1)
        )
    mean = float(per_source.mean())
    stderr = None
    if not exact:
        stderr = float(per_source.std(ddof=1) / math.sqrt(len(per_source)))
    return PathLengthResult(mean=mean, stderr=stderr, coverage=coverage,
                            component_size=size, n_sources=len(sources),
                            exact=exact)
