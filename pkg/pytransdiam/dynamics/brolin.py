"""
Inverse-iteration sampling of the equilibrium measure of the map induced on
the projective line by a homogeneous map of C^2.
"""
import logging

import numpy as np

from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          PreconditionFailure)
from pytransdiam.utils.numpy_utils import random_unit_vectors

logger = logging.getLogger(__name__)

# fresh seed points tried after an exceptional pull back
MAX_RESEEDS = 16


class InverseBranches(object):
    """
    The ``d`` preimages of ``[a : b]`` under ``[x : y] -> [F_1 : F_2]``,
    the roots of ``b F_1(x, y) - a F_2(x, y)``.
    """

    def __init__(self, F: PolynomialMap):
        if F.N != 2:
            raise DimensionMismatchError(expected=2, provided=F.N)
        if not F.is_homogeneous() or F.degree < 2:
            raise PreconditionFailure(reason='need a homogeneous map of '
                                             'degree >= 2')
        d = F.degree
        self.degree = d
        # coefficient of x^j y^(d-j), highest power of x first
        self.coeffs = np.array([[complex(p.coefficient((j, d - j)))
                                 for j in range(d, -1, -1)] for p in F],
                               dtype=np.complex128)

    def preimages(self, point: np.ndarray) -> np.ndarray:
        """
        Unit representatives of all ``d`` preimages, with multiplicity;
        roots at ``[1 : 0]`` appear when the x-degree drops.

        :return: ``(d, 2)`` array, or ``None`` at an exceptional point.
        """
        a, b = point
        poly = b * self.coeffs[0] - a * self.coeffs[1]
        scale = np.max(np.abs(poly))
        if not scale > 0 or not np.all(np.isfinite(poly)):
            return None
        roots = np.roots(poly / scale)
        if not np.all(np.isfinite(roots)):
            return None
        out = np.zeros((self.degree, 2), dtype=np.complex128)
        out[:len(roots), 0] = roots
        out[:len(roots), 1] = 1.0
        out[len(roots):, 0] = 1.0
        return out / np.linalg.norm(out, axis=1, keepdims=True)


def brolin_sample(F: PolynomialMap, depth: int, count: int,
                  seed=0) -> np.ndarray:
    """
    One inverse-iteration path on the projective line: from a random seed
    point, each step moves to a uniformly chosen preimage. The first `depth`
    states are discarded and the next `count` returned as unit vectors of
    C^2, shape ``(count, 2)``. ``depth = 0`` and ``count = 1`` return the
    seed point.

    :param seed: Anything :func:`numpy.random.default_rng` accepts.
    """
    if count < 1 or depth < 0:
        raise ValueError(f'need count >= 1 and depth >= 0, got '
                         f'{count}, {depth}')
    branches = InverseBranches(F)
    rng = np.random.default_rng(seed)
    for attempt in range(MAX_RESEEDS):
        path = _inverse_path(branches, rng, depth + count)
        if path is not None:
            return path[depth:]
        logger.warning(f'exceptional point on inverse path, reseeding '
                       f'({attempt + 1})')
    raise PreconditionFailure(reason=f'inverse iteration failed after '
                                     f'{MAX_RESEEDS} seed points')


def _inverse_path(branches: InverseBranches, rng: np.random.Generator,
                  length: int):
    states = np.empty((length, 2), dtype=np.complex128)
    state = random_unit_vectors(rng, 1, 2)[0]
    for k in range(length):
        states[k] = state
        if k + 1 < length:
            pre = branches.preimages(state)
            if pre is None:
                return None
            state = pre[rng.integers(branches.degree)]
    return states
