"""
Monte-Carlo check, for homogeneous maps of C^2, of

    int g^F dFS + int g^F dT_f = log |Res(F)| / (d (d - 1)) - 1/2

where ``dFS`` is the normalized unitarily invariant measure on the unit
sphere and ``T_f`` the equilibrium measure of the induced map of P^1.
"""
import logging
import math

import numpy as np
from joblib import Parallel, delayed

from pytransdiam.data._holders import BBReport
from pytransdiam.dynamics.brolin import brolin_sample
from pytransdiam.dynamics.escape import green_on_sphere
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.resultant.numeric import abs_resultant
from pytransdiam.utils.common_utils import (default_threads, restart_seeds,
                                            seed_entropy)
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          NonRegularMapError,
                                          PreconditionFailure)
from pytransdiam.utils.numpy_utils import random_unit_vectors

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 100000
DEFAULT_DEPTH = 12
CHUNK_SIZE = 4096


def bb_rhs(res_abs: float, d: int) -> float:
    return math.log(res_abs) / (d * (d - 1)) - 0.5


def _chunk_sums(F: PolynomialMap, size: int, depth: int, sphere_seed,
                brolin_seed):
    """Sums of ``g^F`` over `size` sphere points and `size` path points."""
    rng = np.random.default_rng(sphere_seed)
    sphere = green_on_sphere(F, random_unit_vectors(rng, size, 2))
    path = green_on_sphere(F, brolin_sample(F, depth, size, brolin_seed))
    return math.fsum(sphere), math.fsum(path)


def chunk_sizes(samples: int, chunk_size: int):
    full, rest = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def bb_check(F: PolynomialMap, samples: int = DEFAULT_SAMPLES,
             depth: int = DEFAULT_DEPTH, seed=0, threads: int = None,
             chunk_size: int = CHUNK_SIZE) -> BBReport:
    """
    Estimate both integrals with `samples` points each and compare with the
    resultant side.

    Samples are drawn in chunks; chunk ``k`` owns the streams
    ``[seed, 0, k]`` (sphere) and ``[seed, 1, k]`` (inverse path, with its
    own burn-in of `depth` steps). Chunk sums are reduced in chunk order, so
    the result depends on the seed and chunk size only.

    :raises PreconditionFailure: Unless `F` is homogeneous of degree >= 2.
    :raises NonRegularMapError: If ``Res(F) = 0``.
    """
    if F.N != 2:
        raise DimensionMismatchError(expected=2, provided=F.N)
    if not F.is_homogeneous() or F.degree < 2:
        raise PreconditionFailure(reason='need a homogeneous map of degree '
                                         '>= 2')
    if samples < 1:
        raise ValueError(f'samples must be positive, got {samples}')
    res_abs = abs_resultant(F)
    if res_abs == 0:
        raise NonRegularMapError(reason='Res(F) = 0')
    d = F.degree
    rhs = bb_rhs(res_abs, d)

    sizes = chunk_sizes(samples, chunk_size)
    sphere_seeds = restart_seeds(seed_entropy(seed, 0), len(sizes))
    path_seeds = restart_seeds(seed_entropy(seed, 1), len(sizes))
    threads = default_threads() if threads is None else threads
    sums = Parallel(n_jobs=threads, backend='threading')(
            delayed(_chunk_sums)(F, size, depth, s, b)
            for size, s, b in zip(sizes, sphere_seeds, path_seeds))
    sphere_mean = math.fsum(s for s, _ in sums) / samples
    path_mean = math.fsum(p for _, p in sums) / samples
    lhs = sphere_mean + path_mean
    gap = abs(lhs - rhs)
    logger.info(f'BB: sphere {sphere_mean:.6g} + current {path_mean:.6g} = '
                f'{lhs:.6g} vs {rhs:.6g}, gap {gap:.3g}')
    return BBReport(lhs, rhs, gap, samples, depth, seed, res_abs)
