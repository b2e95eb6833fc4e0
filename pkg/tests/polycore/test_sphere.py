import math

import numpy as np
import pytest

from pytransdiam.polycore.scalars import (GaussianRational, parse_coefficient,
                                          scalar_to_json)
from pytransdiam.polycore.sphere import (max_leading_norm_on_sphere,
                                         min_leading_norm_on_sphere,
                                         sphere_points)
from pytransdiam.utils.enums import ScalarDomain


def test_sphere_points_are_unit():
    z = sphere_points(3, 100, seed=1)
    assert z.shape == (100, 3)
    assert np.allclose(np.linalg.norm(z, axis=1), 1.0)


def test_extrema_of_squares(squares_2d):
    assert min_leading_norm_on_sphere(squares_2d, 1024) == \
        pytest.approx(1 / math.sqrt(2), abs=1e-3)
    assert max_leading_norm_on_sphere(squares_2d, 1024) == \
        pytest.approx(1.0, abs=1e-3)


def test_minimum_vanishes_for_degenerate_map(degenerate_quadratic):
    assert min_leading_norm_on_sphere(degenerate_quadratic, 1024) < 1e-2


class TestScalars(object):

    def test_gaussian_arithmetic(self):
        i = GaussianRational(0, 1)
        assert i * i == -1
        assert (1 + i) / (1 - i) == i
        assert (1 + i).norm() == 2

    @pytest.mark.parametrize('re,im,domain', [
        ('1/2', '0', ScalarDomain.EXACT_RATIONAL),
        ('1', '-3', ScalarDomain.GAUSSIAN_RATIONAL),
        ('0.5', '0', ScalarDomain.COMPLEX_FLOAT),
    ])
    def test_parse_coefficient(self, re, im, domain):
        value, got = parse_coefficient(re, im)
        assert got is domain
        text = scalar_to_json(value)
        assert parse_coefficient(text['re'], text['im'])[0] == value
