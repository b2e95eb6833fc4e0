import math

import numpy as np
import pytest

from pytransdiam.fekete.configuration import FeketeConfiguration
from pytransdiam.fekete.diameter import (DIAM_COLUMNS, diam_sequence,
                                         diameter_frame, dn_estimate,
                                         fattening_report)
from pytransdiam.fekete.exchange import (derived_seed_labels,
                                         exchange_optimize,
                                         perturbation_scale)
from pytransdiam.fekete.leja import greedy_leja, leja_select
from pytransdiam.fekete.oracle import BallOracle, PointsOracle, PolydiscOracle
from pytransdiam.fekete.vandermonde import (hadamard_log_bound,
                                            vandermonde_logabsdet)
from pytransdiam.utils.exceptions import (ConfigError,
                                          DegenerateOracleError,
                                          InvalidPointCountError)


def disc_bound(n):
    """d_n of the closed unit disc."""
    return (n + 1) ** (1.0 / n)


class TestFeketeConfiguration(object):

    def test_point_count_checked(self):
        with pytest.raises(InvalidPointCountError):
            FeketeConfiguration(2, np.zeros((5, 1)), 0.0)

    def test_points_read_only(self):
        config = FeketeConfiguration(1, [[0.0], [1.0]], 0.0)
        assert config.N == 1 and config.M == 2
        with pytest.raises(ValueError):
            config.points[0, 0] = 3.0

    def test_singular(self):
        config = FeketeConfiguration(1, [[1.0], [1.0]], -math.inf)
        assert not config.is_finite
        assert config.d_n == 0.0


class TestLeja(object):

    def test_two_points_of_the_disc(self, unit_disc):
        """The second point is the candidate farthest from the first."""
        config = greedy_leja(unit_disc, 1, candidate_count=512, seed=3)
        assert config.M == 2
        assert 1.0 <= config.d_n <= 2.0
        assert config.seeds == ('3-1-0',)

    def test_degree_zero(self, unit_bidisc):
        config = greedy_leja(unit_bidisc, 0, candidate_count=16)
        assert config.log_abs_det == 0.0
        assert config.d_n == 1.0

    def test_interval_endpoints(self, segment):
        """The first two greedy points of [-1, 1] are its endpoints."""
        config = greedy_leja(segment, 1, candidate_count=64)
        assert sorted(config.points[:, 0].real) == [-1.0, 1.0]
        assert config.d_n == pytest.approx(2.0)

    def test_same_seed_same_points(self, unit_bidisc):
        a = greedy_leja(unit_bidisc, 2, candidate_count=256, seed=9)
        b = greedy_leja(unit_bidisc, 2, candidate_count=256, seed=9)
        assert np.array_equal(a.points, b.points)
        assert a.log_abs_det == b.log_abs_det

    def test_singleton_is_degenerate(self):
        oracle = PointsOracle([[0.5]])
        with pytest.raises(DegenerateOracleError):
            greedy_leja(oracle, 1, candidate_count=64)

    def test_too_few_candidates(self, unit_bidisc):
        with pytest.raises(ConfigError):
            greedy_leja(unit_bidisc, 3, candidate_count=5)

    def test_leja_select_zero_pivot(self):
        candidates = np.array([[1.0], [1.0], [1.0]], dtype=complex)
        assert leja_select(candidates, 1, np.array([1.0])) is None


class TestExchange(object):

    def test_no_rounds_returns_input(self, unit_disc):
        config = greedy_leja(unit_disc, 3, candidate_count=256)
        assert exchange_optimize(config, unit_disc, rounds=0) is config
        assert exchange_optimize(config, unit_disc, restarts=0) is config

    def test_never_decreases(self, unit_disc):
        config = greedy_leja(unit_disc, 4, candidate_count=128)
        better = exchange_optimize(config, unit_disc, rounds=50, restarts=2,
                                   threads=1)
        assert better.log_abs_det >= config.log_abs_det
        assert better.d_n <= disc_bound(4) + 1e-6

    def test_more_rounds_never_worse(self, unit_bidisc):
        config = greedy_leja(unit_bidisc, 2, candidate_count=128, seed=1)
        short = exchange_optimize(config, unit_bidisc, rounds=20, restarts=2,
                                  seed=1, threads=1)
        long = exchange_optimize(config, unit_bidisc, rounds=80, restarts=2,
                                 seed=1, threads=1)
        more = exchange_optimize(config, unit_bidisc, rounds=20, restarts=4,
                                 seed=1, threads=1)
        assert long.log_abs_det >= short.log_abs_det - 1e-9
        assert more.log_abs_det >= short.log_abs_det - 1e-9

    def test_reported_value_matches_points(self, unit_bidisc):
        config = greedy_leja(unit_bidisc, 2, candidate_count=128)
        better = exchange_optimize(config, unit_bidisc, rounds=40, restarts=1,
                                   threads=1)
        assert better.log_abs_det == pytest.approx(
                vandermonde_logabsdet(better.points, 2, 2), abs=1e-12)
        assert np.all(unit_bidisc.contains(better.points))

    def test_thread_count_does_not_change_result(self, unit_disc):
        config = greedy_leja(unit_disc, 3, candidate_count=128)
        one = exchange_optimize(config, unit_disc, rounds=30, restarts=3,
                                threads=1)
        three = exchange_optimize(config, unit_disc, rounds=30, restarts=3,
                                  threads=3)
        assert one.log_abs_det == three.log_abs_det
        assert np.array_equal(one.points, three.points)

    def test_perturbation_schedule(self):
        assert perturbation_scale(0.05, 0) == 0.05
        assert perturbation_scale(0.05, 10 ** 6) == pytest.approx(0.001)
        assert perturbation_scale(0.05, 100) < perturbation_scale(0.05, 10)

    def test_seed_labels(self):
        assert derived_seed_labels(7, 2, 2) == ['7-2-0', '7-2-1-0', '7-2-1-1']


class TestDiameter(object):

    def test_disc_sequence(self, unit_disc, small_budget):
        summary = diam_sequence(unit_disc, 4, small_budget)
        assert [r.n for r in summary.rows] == [1, 2, 3, 4]
        for row in summary.rows:
            assert 0.9 < row.d_n <= disc_bound(row.n) + 1e-6
        assert summary.final == summary.rows[-1].d_n

    def test_polydisc_below_hadamard(self, small_budget):
        radii = [1.0, 2.0]
        oracle = PolydiscOracle(radii)
        config = dn_estimate(oracle, 2, small_budget)
        assert config.log_abs_det <= hadamard_log_bound(radii, 2)

    def test_sequence_needs_a_degree(self, unit_disc):
        with pytest.raises(ValueError):
            diam_sequence(unit_disc, 0)

    def test_frame(self, segment, greedy_budget):
        configs = []
        summary = diam_sequence(segment, 3, greedy_budget, configs=configs)
        frame = diameter_frame(summary)
        assert list(frame.columns) == DIAM_COLUMNS
        assert frame['M'].tolist() == [2, 3, 4]
        assert frame['D'].tolist() == [1, 3, 6]
        assert len(configs) == 3

    def test_start_must_be_members(self, unit_disc, greedy_budget):
        start = FeketeConfiguration(1, [[0.0], [2.0]], math.log(2.0))
        with pytest.raises(DegenerateOracleError):
            dn_estimate(unit_disc, 1, greedy_budget, start=start)

    def test_fattening(self, small_budget):
        frame = fattening_report(PolydiscOracle.unit(2), 2, [0.01, 0.1],
                                 small_budget)
        assert frame['eps'].tolist() == [0.0, 0.01, 0.1]
        assert frame['relative_change'].iloc[0] == 0.0
        assert np.all(frame['relative_change'] >= 0.0)


class TestInclusion(object):

    @pytest.mark.parametrize('small,large', [
        (PolydiscOracle.unit(1), PolydiscOracle([1.5])),
        (PolydiscOracle.unit(2), BallOracle(2, 1.5)),
    ])
    def test_larger_set_never_smaller(self, small, large, small_budget):
        for n in (1, 2, 3):
            inner = dn_estimate(small, n, small_budget, seed=2)
            outer = dn_estimate(large, n, small_budget, seed=2, start=inner)
            assert outer.log_abs_det >= inner.log_abs_det
            assert np.all(large.contains(outer.points))


@pytest.mark.slow
class TestFullBudget(object):

    def test_disc_optima(self, unit_disc, full_budget):
        """Two antipodal points, then an equilateral triangle."""
        summary = diam_sequence(unit_disc, 8, full_budget)
        d = {row.n: row.d_n for row in summary.rows}
        assert d[1] >= 1.98
        assert d[2] >= 1.715
        for n, value in d.items():
            assert value <= disc_bound(n) + 1e-6

    def test_ball_degree_ten(self, full_budget):
        """
        A lower bound for d_10 of the unit ball of C^2. The root mean square
        of |det| over random sphere points already gives d_10 > 0.94, above
        the limit exp(-1/4), so only the lower edge is a useful window.
        """
        ball = BallOracle(2, 1.0)
        config = dn_estimate(ball, 10, full_budget, seed=1)
        assert config.d_n >= 0.74
        assert config.log_abs_det <= hadamard_log_bound([1.0, 1.0], 10)
        assert np.all(ball.contains(config.points))
