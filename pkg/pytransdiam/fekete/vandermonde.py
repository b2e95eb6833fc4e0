"""
Generalized Vandermonde matrices and their log-absolute determinants.
"""
import logging
import math

import numpy as np
from scipy import linalg

from pytransdiam.polycore.monomials import (count_monomials, exponent_matrix,
                                            vandermonde_degree)
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          InvalidPointCountError)
from pytransdiam.utils.numpy_utils import as_points, monomial_values

logger = logging.getLogger(__name__)

# relative size of the smallest R diagonal below which a matrix is singular
SINGULAR_RTOL = 1e-13


def column_scales(exponents: np.ndarray, radii: np.ndarray) -> np.ndarray:
    """``prod_j radii_j^alpha_j`` for every monomial alpha."""
    radii = np.asarray(radii, dtype=float)
    return np.exp(exponents @ np.log(radii))


def scaled_vandermonde(points: np.ndarray, n: int,
                       radii: np.ndarray) -> np.ndarray:
    """
    Rows are points, columns monomials of degree at most `n` in graded
    lexicographic order, column alpha divided by ``prod_j radii_j^alpha_j``.
    """
    N = points.shape[1]
    exps = exponent_matrix(N, n)
    return monomial_values(points, exps) / column_scales(exps, radii)


def log_scale_correction(N: int, n: int, radii: np.ndarray) -> float:
    """
    ``log prod_alpha prod_j radii_j^alpha_j``; every coordinate appears
    with total degree ``D(n) / N`` over the monomials.
    """
    return vandermonde_degree(N, n) / N * float(np.sum(np.log(radii)))


def point_radii(points: np.ndarray) -> np.ndarray:
    """Per-coordinate max modulus of the points, 1 where it vanishes."""
    radii = np.max(np.abs(points), axis=0)
    return np.where(radii > 0, radii, 1.0)


def logabsdet(matrix: np.ndarray) -> float:
    """
    ``log |det|`` through a column pivoted QR factorization; ``-inf`` when
    the factorization reveals a rank drop.
    """
    if matrix.shape[0] == 0:
        return 0.0
    R, _ = linalg.qr(matrix, mode='r', pivoting=True)
    diag = np.abs(np.diag(R))
    if diag[0] == 0 or diag[-1] <= SINGULAR_RTOL * diag[0]:
        return -math.inf
    return float(np.sum(np.log(diag)))


def vandermonde_logabsdet(points, N: int, n: int, radii=None) -> float:
    """
    ``log |det(e_i(zeta_j))|`` over the monomials e_i of degree at most `n`.

    Columns are scaled by per-coordinate radii (the max modulus of the
    points by default) and the scaling is added back as an exact log
    correction, so the value is stable for large `n`.

    :param points: ``M(n)`` points of C^N, shape ``(M, N)``.
    :raises InvalidPointCountError: Unless exactly ``M(n)`` points are given.
    """
    pts = as_points(points, N)
    if pts.shape[1] != N:
        raise DimensionMismatchError(expected=N, provided=pts.shape[1])
    M = count_monomials(N, n)
    if pts.shape[0] != M:
        raise InvalidPointCountError(expected=M, provided=pts.shape[0])
    radii = point_radii(pts) if radii is None else np.asarray(radii, float)
    value = logabsdet(scaled_vandermonde(pts, n, radii))
    if value == -math.inf:
        return value
    return value + log_scale_correction(N, n, radii)


def dn_from_logdet(log_abs_det: float, N: int, n: int) -> float:
    """``exp(log_abs_det / D(n))``; 0 for singular configurations."""
    D = vandermonde_degree(N, n)
    if D == 0:
        return 1.0
    if log_abs_det == -math.inf:
        return 0.0
    return math.exp(log_abs_det / D)


def hadamard_log_bound(radii, n: int) -> float:
    """
    Hadamard's bound on ``log |det|`` for the polydisc of polyradius
    `radii`: every scaled entry has modulus at most 1, so
    ``|det| <= M^(M/2)`` before the scaling correction.
    """
    radii = np.asarray(radii, dtype=float)
    N = len(radii)
    M = count_monomials(N, n)
    return 0.5 * M * math.log(M) + log_scale_correction(N, n, radii)


def factorial_log_bound(radii, n: int) -> float:
    """The weaker ``log(M!)`` bound, also scaled by the polyradius."""
    radii = np.asarray(radii, dtype=float)
    N = len(radii)
    M = count_monomials(N, n)
    return math.lgamma(M + 1) + log_scale_correction(N, n, radii)
