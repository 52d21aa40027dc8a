import math

import numpy as np
import pytest
import scipy.sparse as sp

from lightcone import (
    DisconnectedGraphError,
    PowerLaw,
    RandomGaussian,
    SampledGraph,
    avg_degree_random,
    measure_avg_path_length,
    path_length_random,
    powerlaw_cutoff,
    powerlaw_max_degree,
    powerlaw_mean_degree,
    sample_graph,
    sample_powerlaw_degrees,
)


def graph_from_edges(n, edges):
    """Hand-built SampledGraph for the tiny deterministic cases."""
    rows = [i for i, _ in edges] + [j for _, j in edges]
    cols = [j for _, j in edges] + [i for i, _ in edges]
    adj = sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    return SampledGraph(n_nodes=n, adjacency=adj, seed=0)


def quadrature_mean_degree(dist, n_total, points=200_001):
    """Independent oracle: numerically integrate k*p(k).

    Geometric grid, since the integrand spans many decades for heavy
    tails; trapezoid on that grid resolves the density near k_min.
    """
    lo = dist.k_min
    hi = powerlaw_cutoff(dist, n_total)
    grid = np.geomspace(lo, hi, points)
    weight = grid ** (-dist.alpha)
    return np.trapezoid(grid * weight, grid) / np.trapezoid(weight, grid)


class TestAvgDegreeRandom:
    def test_hundred_thousand_nodes_path_length_two(self):
        k = avg_degree_random(1e5, 2.0)
        assert k == pytest.approx(390.6667520532305, rel=1e-12)
        assert 370 <= k <= 410

    def test_million_nodes_need_over_a_thousand(self):
        assert avg_degree_random(1e6, 2.0) > 1000

    def test_returns_more_than_one(self):
        assert avg_degree_random(2, 1.0) > 1

    def test_monotone_in_size_and_path_length(self):
        sizes = [1e3, 1e4, 1e5, 1e6]
        ks = [avg_degree_random(n, 2.0) for n in sizes]
        assert all(a < b for a, b in zip(ks, ks[1:]))
        lengths = [1.5, 2.0, 2.5, 3.0]
        ks = [avg_degree_random(1e5, length) for length in lengths]
        assert all(a > b for a, b in zip(ks, ks[1:]))

    @pytest.mark.parametrize("n,path", [(1, 2.0), (0, 2.0), (1e4, 0.5)])
    def test_domain_errors(self, n, path):
        with pytest.raises(ValueError):
            avg_degree_random(n, path)


class TestPathLengthRandom:
    def test_inverts_degree_formula(self):
        k = avg_degree_random(1e5, 2.0)
        assert path_length_random(1e5, k) == pytest.approx(2.0, rel=1e-12)

    def test_round_trip_exact_inverse(self):
        assert avg_degree_random(
            1e4, path_length_random(1e4, 50.0)
        ) == pytest.approx(50.0, rel=1e-9)

    def test_inverse_across_grid(self):
        for n in [1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8]:
            for length in [1.5, 2.0, 3.0, 4.0, 5.0]:
                k = avg_degree_random(n, length)
                assert path_length_random(n, k) == pytest.approx(
                    length, rel=1e-9
                )

    def test_dense_graph_has_short_paths(self):
        assert path_length_random(100, 99) < 2.0

    def test_formula_point_frozen(self):
        assert path_length_random(1e4, 100.0) == pytest.approx(
            2.1029882601561956, rel=1e-12
        )

    def test_degree_below_exp_half_rejected(self):
        with pytest.raises(ValueError):
            path_length_random(1e4, 1.6)
        with pytest.raises(ValueError):
            path_length_random(1e4, math.exp(0.5))


class TestPowerLawValidation:
    def test_alpha_bounds(self):
        with pytest.raises(ValueError):
            PowerLaw(alpha=1.0)
        with pytest.raises(ValueError):
            PowerLaw(alpha=4.5)
        PowerLaw(alpha=4.0)

    def test_cutoff_ordering(self):
        with pytest.raises(ValueError):
            PowerLaw(alpha=2.0, k_min=10, k_max=5)

    def test_random_gaussian_bounds(self):
        with pytest.raises(ValueError):
            RandomGaussian(n_total=1, avg_path_length=2.0)
        with pytest.raises(ValueError):
            RandomGaussian(n_total=100, avg_path_length=0.9)


class TestPowerLawMeanDegree:
    def test_alpha_two_log_branch_frozen(self):
        value = powerlaw_mean_degree(PowerLaw(alpha=2.0, k_min=1.0), 1e4)
        assert value == pytest.approx(9.211261498125996, rel=1e-12)
        assert value == pytest.approx(
            quadrature_mean_degree(PowerLaw(alpha=2.0), 1e4), rel=1e-6
        )

    @pytest.mark.parametrize("alpha", [1.5, 2.0, 2.5, 3.0])
    @pytest.mark.parametrize("n", [1e3, 1e4, 1e6])
    def test_matches_quadrature_oracle(self, alpha, n):
        dist = PowerLaw(alpha=alpha, k_min=1.0)
        closed = powerlaw_mean_degree(dist, n)
        oracle = quadrature_mean_degree(dist, n)
        assert closed == pytest.approx(oracle, rel=0.02)

    def test_smaller_alpha_means_larger_mean(self):
        values = [
            powerlaw_mean_degree(PowerLaw(alpha=a), 1e6)
            for a in (1.5, 2.0, 2.5)
        ]
        assert values[0] > values[1] > values[2]

    def test_tight_exponent_collapses_toward_k_min(self):
        # Continuous-law limit for a steep exponent: (alpha-1)/(alpha-2)*k_min.
        value = powerlaw_mean_degree(PowerLaw(alpha=4.0, k_min=1.0), 1e6)
        assert value == pytest.approx(1.5, rel=0.01)
        steeper = [
            powerlaw_mean_degree(PowerLaw(alpha=a), 1e6)
            for a in (3.0, 3.5, 4.0)
        ]
        assert steeper[0] > steeper[1] > steeper[2]

    def test_grows_with_n_below_alpha_three(self):
        for alpha in (1.5, 2.0, 2.5):
            dist = PowerLaw(alpha=alpha)
            assert powerlaw_mean_degree(dist, 1e6) > powerlaw_mean_degree(
                dist, 1e4
            )

    def test_saturates_above_alpha_three(self):
        dist = PowerLaw(alpha=3.5)
        small, big = powerlaw_mean_degree(dist, 1e4), powerlaw_mean_degree(dist, 1e8)
        assert big / small < 1.05

    def test_mean_at_least_k_min(self):
        assert powerlaw_mean_degree(PowerLaw(alpha=2.5, k_min=3.0), 1e4) >= 3.0

    def test_explicit_cutoff_is_n_independent(self):
        dist = PowerLaw(alpha=2.5, k_min=2.0, k_max=500.0)
        assert powerlaw_mean_degree(dist, 1e4) == powerlaw_mean_degree(dist, 1e7)


class TestPowerLawMaxDegree:
    def test_exponent_two_natural_cutoff(self):
        assert powerlaw_max_degree(PowerLaw(alpha=2.0), 1e6) == pytest.approx(1e6)

    def test_exponent_three_square_root(self):
        assert powerlaw_max_degree(PowerLaw(alpha=3.0), 1e6) == pytest.approx(1e3)

    def test_heavy_tail(self):
        assert powerlaw_max_degree(PowerLaw(alpha=1.5), 1e4) == pytest.approx(1e8)

    def test_monotonicity(self):
        assert powerlaw_max_degree(PowerLaw(alpha=2.5), 1e6) > powerlaw_max_degree(
            PowerLaw(alpha=2.5), 1e4
        )
        assert powerlaw_max_degree(PowerLaw(alpha=2.0), 1e6) > powerlaw_max_degree(
            PowerLaw(alpha=2.5), 1e6
        )

    def test_explicit_cutoff_caps_the_estimate(self):
        assert powerlaw_max_degree(PowerLaw(alpha=2.0, k_max=100.0), 1e6) == 100.0

    def test_sampling_oracle_same_order_of_magnitude(self):
        dist = PowerLaw(alpha=1.5, k_min=1.0)
        analytic = powerlaw_max_degree(dist, 1e4)
        maxima = []
        for seed in range(100):
            rng = np.random.default_rng(seed)
            maxima.append(sample_powerlaw_degrees(dist, 10**4, rng).max())
        median = float(np.median(maxima))
        assert abs(math.log10(median) - math.log10(analytic)) <= 1.0


class TestSampleGraph:
    def test_er_mean_degree_hits_target(self):
        dist = RandomGaussian(
            n_total=10**4, avg_path_length=path_length_random(1e4, 50.0)
        )
        graph = sample_graph(dist, 10**4, seed=1)
        assert abs(graph.degrees.mean() - 50.0) <= 2.5

    def test_powerlaw_degrees_respect_k_min_before_cleanup(self):
        graph = sample_graph(PowerLaw(alpha=2.5, k_min=2.0), 1000, seed=3)
        assert graph.target_degrees.min() >= 2

    @pytest.mark.parametrize("dist", [
        RandomGaussian(n_total=2000, avg_path_length=2.0),
        PowerLaw(alpha=2.5, k_min=2.0),
    ])
    def test_same_seed_same_edges(self, dist):
        a = sample_graph(dist, 2000, seed=9)
        b = sample_graph(dist, 2000, seed=9)
        assert np.array_equal(a.edge_array(), b.edge_array())

    def test_different_seed_different_edges(self):
        dist = PowerLaw(alpha=2.5, k_min=2.0)
        a = sample_graph(dist, 2000, seed=1)
        b = sample_graph(dist, 2000, seed=2)
        assert a.edge_array().shape != b.edge_array().shape or not np.array_equal(
            a.edge_array(), b.edge_array()
        )

    def test_no_self_loops_or_parallel_edges(self):
        graph = sample_graph(PowerLaw(alpha=2.5, k_min=2.0), 3000, seed=5)
        adj = graph.adjacency
        assert adj.diagonal().sum() == 0
        assert np.all(adj.data == 1.0)
        assert (adj != adj.T).nnz == 0

    def test_infeasible_degree_sequence_rejected(self):
        with pytest.raises(ValueError, match="infeasible"):
            sample_graph(PowerLaw(alpha=2.5, k_min=2000.0), 1000, seed=0)

    def test_memory_budget_rejected(self):
        with pytest.raises(ValueError, match="memory budget"):
            sample_graph(RandomGaussian(10**6, 1.2), 10**6, seed=0)
        with pytest.raises(ValueError, match="memory budget"):
            sample_graph(PowerLaw(alpha=1.5, k_min=300.0, k_max=999.0),
                         10**6, seed=0)

    def test_degree_distribution_fits_power_law_in_interior(self):
        # Empirical CCDF of the drawn sequence vs the integerized
        # continuous law over [k_min, k_max/10].
        dist = PowerLaw(alpha=2.5, k_min=2.0)
        n = 10**4
        hi = powerlaw_cutoff(dist, n)
        ks = np.arange(3, int(hi / 10) + 1)
        grid = np.linspace(dist.k_min, hi, 400_001)
        weight = grid ** (-dist.alpha)
        norm = np.trapezoid(weight, grid)
        model = []
        for k in ks:
            tail = np.trapezoid(weight[grid >= k], grid[grid >= k]) / norm
            in_bin = (grid >= k - 1) & (grid <= k)
            round_up = np.trapezoid(
                (grid[in_bin] - (k - 1)) * weight[in_bin], grid[in_bin]
            ) / norm
            model.append(tail + round_up)
        model = np.asarray(model)
        for seed in (0, 1, 2, 3):
            degrees = sample_graph(dist, n, seed=seed).target_degrees
            empirical = np.asarray([(degrees >= k).mean() for k in ks])
            assert np.abs(empirical - model).max() <= 0.02


class TestMeasureAvgPathLength:
    def test_path_graph(self):
        graph = graph_from_edges(3, [(0, 1), (1, 2)])
        result = measure_avg_path_length(graph)
        assert result.mean == pytest.approx(4.0 / 3.0, rel=1e-12)
        assert result.exact
        assert result.stderr is None
        assert result.coverage == 1.0

    def test_complete_graph(self):
        edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        result = measure_avg_path_length(graph_from_edges(5, edges))
        assert result.mean == pytest.approx(1.0)

    def test_disconnected_graph_reports_components(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        with pytest.raises(DisconnectedGraphError) as info:
            measure_avg_path_length(graph_from_edges(6, edges))
        assert info.value.coverage == pytest.approx(0.5)
        assert sorted(info.value.component_sizes, reverse=True)[0] == 3

    def test_sampled_estimate_reports_stderr(self):
        dist = RandomGaussian(n_total=4000, avg_path_length=2.0)
        graph = sample_graph(dist, 4000, seed=2)
        result = measure_avg_path_length(graph, source_sample=64)
        assert not result.exact
        assert result.stderr is not None and result.stderr > 0
        assert result.n_sources == 64

    @pytest.mark.parametrize("target_length,seeds", [(2.0, (0, 1)), (3.0, (0, 1))])
    def test_er_measurement_matches_formula(self, target_length, seeds):
        # The formula deviates most mid-way between integer distance
        # plateaus; at these anchors it stays within 10% of the
        # measured value.
        n = 10**4
        dist = RandomGaussian(n_total=n, avg_path_length=target_length)
        for seed in seeds:
            graph = sample_graph(dist, n, seed=seed)
            measured = measure_avg_path_length(graph, source_sample=256).mean
            assert abs(target_length - measured) / measured <= 0.10

    def test_formula_point_cross_checked_against_bfs(self):
        # k = 100 at n = 1e4 sits between distance plateaus, where the
        # closed form is weakest; the measured value brackets it within 15%.
        n = 10**4
        formula = path_length_random(n, 100.0)
        dist = RandomGaussian(n_total=n, avg_path_length=formula)
        graph = sample_graph(dist, n, seed=4)
        measured = measure_avg_path_length(graph, source_sample=256).mean
        assert abs(formula - measured) / measured <= 0.15
