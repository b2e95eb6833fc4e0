"""
Sampled extrema of ``|F_h|`` on the unit sphere of C^N.

These figures are advisory. A positive minimum is evidence of regularity,
the certificate is a nonzero resultant.
"""
import logging
import math

import numpy as np
from scipy import optimize
from scipy.special import ndtri
from scipy.stats import qmc

from pytransdiam.polycore.polymap import PolynomialMap

logger = logging.getLogger(__name__)

DEFAULT_SPHERE_SAMPLES = 4096
DEFAULT_POLISH = 4


def sphere_points(N: int, samples: int, seed=None) -> np.ndarray:
    """
    Quasi-uniform points on the unit sphere of C^N: a scrambled Sobol
    sequence in R^(2N) pushed through the normal quantile function, then
    normalized.
    """
    sampler = qmc.Sobol(d=2 * N, scramble=True, seed=seed)
    m = max(1, math.ceil(math.log2(max(samples, 2))))
    u = sampler.random_base2(m)[:samples]
    u = np.clip(u, 1e-12, 1 - 1e-12)
    x = ndtri(u)
    z = x[:, :N] + 1j * x[:, N:]
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def _leading_norm(poly_map: PolynomialMap, z: np.ndarray) -> np.ndarray:
    return np.linalg.norm(poly_map.float_evaluator.leading(z), axis=1)


def _polish(poly_map: PolynomialMap, start: np.ndarray, sign: float) -> float:
    N = poly_map.N

    def objective(x):
        z = x[:N] + 1j * x[N:]
        r = np.linalg.norm(z)
        if r == 0:
            return np.inf
        return sign * _leading_norm(poly_map, (z / r)[None, :])[0]

    x0 = np.concatenate([start.real, start.imag])
    res = optimize.minimize(objective, x0, method='Nelder-Mead',
                            options={'xatol': 1e-10, 'fatol': 1e-14,
                                     'maxiter': 400 * N})
    return sign * res.fun


def _extremum(F_h: PolynomialMap, samples: int, seed, sign: float,
              polish: int) -> float:
    z = sphere_points(F_h.N, samples, seed)
    values = _leading_norm(F_h, z)
    order = np.argsort(sign * values)
    best = float(values[order[0]])
    for k in order[:polish]:
        polished = _polish(F_h, z[k], sign)
        if np.isfinite(polished) and sign * polished < sign * best:
            best = polished
    return max(best, 0.0)


def min_leading_norm_on_sphere(F_h: PolynomialMap,
                               samples: int = DEFAULT_SPHERE_SAMPLES,
                               seed=0, polish: int = DEFAULT_POLISH) -> float:
    """
    Sampled minimum of ``|F_h(z)|`` over ``|z| = 1`` with a Nelder-Mead
    polish of the best few samples.

    :param F_h: The map; only its leading homogeneous part is used.
    :param samples: Number of quasi-random sphere points.
    :param seed: Seed of the Sobol scrambling.
    :param polish: How many of the best samples get a local descent.
    """
    m = _extremum(F_h.leading_part(), samples, seed, 1.0, polish)
    logger.debug(f'sphere minimum of |F_h| = {m:.6g} ({samples} samples)')
    return m


def max_leading_norm_on_sphere(F_h: PolynomialMap,
                               samples: int = DEFAULT_SPHERE_SAMPLES,
                               seed=0, polish: int = DEFAULT_POLISH) -> float:
    """Sampled maximum of ``|F_h(z)|`` over ``|z| = 1``."""
    return _extremum(F_h.leading_part(), samples, seed, -1.0, polish)
