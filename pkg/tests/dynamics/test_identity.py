import math

import numpy as np
import pytest

from pytransdiam.dynamics.identity import bb_check, bb_rhs, chunk_sizes
from pytransdiam.dynamics.brolin import InverseBranches, brolin_sample
from pytransdiam.polycore.polymap import map_from_expressions
from pytransdiam.resultant.macaulay import pure_powers
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          PreconditionFailure)
from pytransdiam.utils.numpy_utils import random_unit_vectors


class TestBrolin(object):

    def test_zero_depth_returns_seed_point(self, squares_2d):
        path = brolin_sample(squares_2d, 0, 1, seed=42)
        expected = random_unit_vectors(np.random.default_rng(42), 1, 2)
        assert np.array_equal(path, expected)

    def test_shape_and_norm(self, doubled_squares_2d):
        path = brolin_sample(doubled_squares_2d, 5, 40, seed=1)
        assert path.shape == (40, 2)
        assert np.allclose(np.linalg.norm(path, axis=1), 1.0)

    def test_squares_settle_on_the_unit_circle(self, squares_2d):
        """The Julia set of [x^2 : y^2] is |x| = |y|."""
        path = brolin_sample(squares_2d, 40, 20, seed=3)
        assert np.allclose(np.abs(path[:, 0]), np.abs(path[:, 1]), atol=1e-6)

    def test_preimages_map_back(self, rng):
        F = map_from_expressions(['z1**2 + z1*z2', 'z2**2 - 3*z1**2'])
        branches = InverseBranches(F)
        point = random_unit_vectors(rng, 1, 2)[0]
        for pre in branches.preimages(point):
            image = F.float_evaluator(pre.reshape(1, 2))[0]
            # same point of P^1
            assert abs(image[0] * point[1] - image[1] * point[0]) < 1e-9 * \
                np.linalg.norm(image)

    def test_invalid_arguments(self, squares_2d, henon_map):
        with pytest.raises(ValueError):
            brolin_sample(squares_2d, 0, 0)
        with pytest.raises(PreconditionFailure):
            brolin_sample(henon_map, 3, 3)
        with pytest.raises(DimensionMismatchError):
            brolin_sample(pure_powers(3, 2), 3, 3)


@pytest.fixture(scope='module')
def henon_map():
    return map_from_expressions(['z1**2 + z2', 'z2**2 - z1'])


class TestBBCheck(object):

    def test_rhs(self):
        assert bb_rhs(1.0, 2) == -0.5
        assert bb_rhs(16.0, 2) == pytest.approx(2 * math.log(2) - 0.5)

    def test_chunk_sizes(self):
        assert chunk_sizes(10, 4) == [4, 4, 2]
        assert chunk_sizes(8, 4) == [4, 4]
        assert chunk_sizes(3, 4) == [3]

    @pytest.mark.parametrize('fixture', ['squares_2d', 'doubled_squares_2d'])
    def test_diagonal_maps(self, request, fixture):
        F = request.getfixturevalue(fixture)
        report = bb_check(F, samples=8192, depth=12, seed=4, threads=1,
                          chunk_size=2048)
        assert report.samples == 8192
        assert report.gap < 0.02
        assert report.lhs == pytest.approx(report.rhs, abs=0.02)

    def test_reproducible_across_threads(self, squares_2d):
        one = bb_check(squares_2d, samples=600, depth=6, seed=2, threads=1,
                       chunk_size=200)
        two = bb_check(squares_2d, samples=600, depth=6, seed=2, threads=2,
                       chunk_size=200)
        assert one.lhs == two.lhs

    def test_needs_two_variables(self):
        with pytest.raises(DimensionMismatchError):
            bb_check(pure_powers(3, 2), samples=10)

    def test_needs_homogeneous_map(self, henon_map):
        with pytest.raises(PreconditionFailure):
            bb_check(henon_map, samples=10)


@pytest.mark.slow
@pytest.mark.parametrize('fixture,rhs', [
    ('squares_2d', -0.5),
    ('doubled_squares_2d', 2 * math.log(2) - 0.5),
])
def test_bb_full_sample(request, fixture, rhs):
    F = request.getfixturevalue(fixture)
    report = bb_check(F, samples=10 ** 5, depth=12, seed=8)
    assert report.rhs == pytest.approx(rhs)
    assert report.gap <= 0.05
