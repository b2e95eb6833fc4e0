import math

import numpy as np
import pytest

from pytransdiam.fekete.vandermonde import (dn_from_logdet,
                                            factorial_log_bound,
                                            hadamard_log_bound,
                                            vandermonde_logabsdet)
from pytransdiam.polycore.monomials import count_monomials, vandermonde_degree
from pytransdiam.utils.exceptions import InvalidPointCountError


def roots_of_unity(k):
    return np.exp(2j * np.pi * np.arange(k) / k).reshape(-1, 1)


def test_two_points():
    assert vandermonde_logabsdet([[0.0], [1.0]], 1, 1) == pytest.approx(0.0)
    assert vandermonde_logabsdet([[-1.0], [1.0]], 1, 1) == \
        pytest.approx(math.log(2))


def test_single_point_degree_zero():
    assert vandermonde_logabsdet([[3 + 4j, 1]], 2, 0) == 0.0
    assert dn_from_logdet(0.0, 2, 0) == 1.0


@pytest.mark.parametrize('n', [1, 2, 5, 9])
def test_roots_of_unity(n):
    """n + 1 roots of unity are Fekete points of the unit disc."""
    value = vandermonde_logabsdet(roots_of_unity(n + 1), 1, n)
    assert value == pytest.approx((n + 1) / 2 * math.log(n + 1))
    assert dn_from_logdet(value, 1, n) == pytest.approx((n + 1) ** (1 / n))


@pytest.mark.parametrize('N,n', [(1, 4), (2, 2), (2, 3), (3, 2)])
def test_scaling_law(rng, N, n):
    """Scaling every point by c adds D(n) log c."""
    M = count_monomials(N, n)
    pts = rng.standard_normal((M, N)) + 1j * rng.standard_normal((M, N))
    base = vandermonde_logabsdet(pts, N, n)
    scaled = vandermonde_logabsdet(3.0 * pts, N, n)
    assert scaled - base == pytest.approx(vandermonde_degree(N, n) *
                                          math.log(3.0), abs=1e-8)


def test_large_degree_stays_finite():
    """Column scaling keeps the determinant of 41 points of radius 5 finite."""
    value = vandermonde_logabsdet(5 * roots_of_unity(41), 1, 40)
    expected = 41 / 2 * math.log(41) + vandermonde_degree(1, 40) * math.log(5)
    assert value == pytest.approx(expected, rel=1e-10)


def test_repeated_point_is_singular():
    assert vandermonde_logabsdet([[1.0], [1.0]], 1, 1) == -math.inf
    assert dn_from_logdet(-math.inf, 1, 1) == 0.0


def test_wrong_point_count():
    with pytest.raises(InvalidPointCountError):
        vandermonde_logabsdet(np.zeros((4, 2)), 2, 1)


def test_bounds(rng):
    radii = np.array([1.0, 2.0])
    pts = np.column_stack([
        np.exp(2j * np.pi * rng.random(10)),
        2 * np.exp(2j * np.pi * rng.random(10))])
    value = vandermonde_logabsdet(pts, 2, 3)
    assert value <= hadamard_log_bound(radii, 3)
    assert hadamard_log_bound(radii, 3) <= factorial_log_bound(radii, 3)
