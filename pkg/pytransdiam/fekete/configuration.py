import math

import numpy as np

from pytransdiam.fekete.vandermonde import dn_from_logdet
from pytransdiam.polycore.monomials import count_monomials
from pytransdiam.utils.exceptions import InvalidPointCountError


class FeketeConfiguration(object):
    """
    ``M(n)`` points of C^N together with the log-absolute Vandermonde
    determinant they achieve.

    :param n: Degree cap.
    :param points: Array of shape ``(M(n), N)``.
    :param log_abs_det: ``log |det(e_i(zeta_j))|``, ``-inf`` if singular.
    :param seeds: Labels of the random streams that produced the points.
    """

    def __init__(self, n: int, points, log_abs_det: float, seeds=()):
        points = np.array(points, dtype=np.complex128)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        M = count_monomials(points.shape[1], n)
        if points.shape[0] != M:
            raise InvalidPointCountError(expected=M, provided=points.shape[0])
        points.setflags(write=False)
        self.n = n
        self.points = points
        self.log_abs_det = float(log_abs_det)
        self.seeds = tuple(seeds)

    @property
    def N(self) -> int:
        return self.points.shape[1]

    @property
    def M(self) -> int:
        return self.points.shape[0]

    @property
    def d_n(self) -> float:
        """``exp(log_abs_det / D(n))``; 1 for n = 0."""
        return dn_from_logdet(self.log_abs_det, self.N, self.n)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.log_abs_det)

    def __repr__(self):
        return (f'FeketeConfiguration(n={self.n}, N={self.N}, '
                f'log_abs_det={self.log_abs_det:.12g}, d_n={self.d_n:.12g})')
