"""
Greedy (discrete Leja) initial configurations: LU factorization with row
pivoting on the candidate Vandermonde matrix picks, column by column, the
candidate that maximizes the growth of the determinant.
"""
import logging

import numpy as np

from pytransdiam.data._holders import DEFAULT_CANDIDATE_COUNT
from pytransdiam.fekete.configuration import FeketeConfiguration
from pytransdiam.fekete.oracle import SetOracle
from pytransdiam.fekete.vandermonde import (scaled_vandermonde,
                                            vandermonde_logabsdet)
from pytransdiam.polycore.monomials import count_monomials
from pytransdiam.utils.common_utils import seed_entropy, seed_label
from pytransdiam.utils.exceptions import ConfigError, DegenerateOracleError

logger = logging.getLogger(__name__)

DEFAULT_RETRIES = 3
# pivots below this fraction of the largest entry count as zero
PIVOT_RTOL = 1e-12


def leja_select(candidates: np.ndarray, n: int, radii) -> np.ndarray:
    """
    Indices of ``M(n)`` rows of the candidate Vandermonde matrix chosen by
    Gaussian elimination with partial pivoting.

    :return: Index array, or ``None`` if a pivot vanishes.
    """
    A = scaled_vandermonde(candidates, n, radii).copy()
    K, M = A.shape
    scale = np.max(np.abs(A)) if A.size else 1.0
    rows = np.arange(K)
    for k in range(M):
        col = np.abs(A[k:, k])
        p = k + int(np.argmax(col))
        if col[p - k] <= PIVOT_RTOL * scale:
            return None
        if p != k:
            A[[k, p]] = A[[p, k]]
            rows[[k, p]] = rows[[p, k]]
        factors = A[k + 1:, k] / A[k, k]
        A[k + 1:, k + 1:] -= np.outer(factors, A[k, k + 1:])
    return rows[:M]


def greedy_leja(oracle: SetOracle, n: int,
                candidate_count: int = DEFAULT_CANDIDATE_COUNT, seed=0,
                retries: int = DEFAULT_RETRIES) -> FeketeConfiguration:
    """
    Pick ``M(n)`` points of the oracle's set one at a time from a sampled
    pool, each maximizing the incremental determinant.

    :raises ConfigError: If ``candidate_count < M(n)``.
    :raises DegenerateOracleError: If `retries` fresh pools all fail.
    """
    M = count_monomials(oracle.N, n)
    if candidate_count < M:
        raise ConfigError(reason=f'candidate_count {candidate_count} is '
                                 f'below M(n) = {M}')
    entropy = seed_entropy(seed, n, 0)
    rng = np.random.default_rng(entropy)
    for attempt in range(retries + 1):
        candidates = oracle.sample(candidate_count, rng)
        idx = leja_select(candidates, n, oracle.coordinate_radii)
        if idx is not None:
            points = candidates[idx]
            value = vandermonde_logabsdet(points, oracle.N, n)
            if np.isfinite(value):
                logger.debug(f'Leja n={n}: log|det| = {value:.6g}')
                return FeketeConfiguration(n, points, value,
                                           seeds=[seed_label(entropy)])
        logger.warning(f'Leja pool {attempt} degenerate for {oracle!r}; '
                       f'resampling')
    raise DegenerateOracleError(count=M, oracle=repr(oracle), retries=retries)
