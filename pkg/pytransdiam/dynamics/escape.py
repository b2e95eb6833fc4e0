"""
Escape-rate (dynamical Green) functions of regular polynomial maps.

Orbits are iterated plainly while they stay inside the escape radius. After
the first escape they are tracked as ``z = e^r u`` with ``|u| = 1``:

    F(e^r u) = e^(d r) (F_h(u) + sum_{k<d} e^((k-d) r) F_k(u))

so ``r`` grows like ``d^n`` without ever forming ``F^n(z)``.
"""
import logging
import math

import numpy as np

from pytransdiam.data._holders import (DEFAULT_ESCAPE_CAP, DEFAULT_ESCAPE_TOL,
                                       EscapeParameters, EscapeResult,
                                       GreenSample)
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.polycore.sphere import (DEFAULT_SPHERE_SAMPLES,
                                         max_leading_norm_on_sphere,
                                         min_leading_norm_on_sphere)
from pytransdiam.utils.exceptions import (PreconditionFailure,
                                          RegularityAdvisoryError)
from pytransdiam.utils.numpy_utils import as_points

logger = logging.getLogger(__name__)

SPHERE_SAFETY = 0.99
# upper limit on the steps taken in log coordinates
MAX_TAIL_STEPS = 4000


def escape_parameters(F: PolynomialMap, cap: int = DEFAULT_ESCAPE_CAP,
                      tol: float = DEFAULT_ESCAPE_TOL,
                      samples: int = DEFAULT_SPHERE_SAMPLES,
                      seed=0) -> EscapeParameters:
    """
    ``R_esc = max(1, (C + 2) / m)`` with ``m`` the shrunk sphere minimum of
    ``|F_h|`` and ``C`` the lower-order coefficient norm. For ``|z| > R_esc``
    this gives ``|F(z)| >= |z|^(d-1) (m |z| - C) >= 2 |z|``.

    :raises PreconditionFailure: If ``d < 2``.
    :raises RegularityAdvisoryError: If the sampled minimum is not positive.
    """
    if F.degree < 2:
        raise PreconditionFailure(reason=f'escape rates need degree >= 2, '
                                         f'got {F.degree}')
    m = min_leading_norm_on_sphere(F, samples, seed)
    if not m > 0:
        raise RegularityAdvisoryError(minimum=m)
    C = F.lower_order_norm()
    radius = max(1.0, (C + 2) / (SPHERE_SAFETY * m))
    logger.debug(f'escape radius {radius:.6g} (m = {m:.6g}, C = {C:.6g})')
    return EscapeParameters(radius, cap, tol, m, C)


def _tail(F: PolynomialMap, r: np.ndarray, u: np.ndarray, tol: float):
    """
    Continue escaped orbits in log coordinates; returns ``r_n / d^n``
    relative to the starting step, once the remaining tail is below `tol`.
    """
    evaluator = F.float_evaluator
    d = F.degree
    log_d = math.log(d)
    steps = np.zeros(len(r), dtype=int)
    done = np.zeros(len(r), dtype=bool)
    r = r.copy()
    for _ in range(MAX_TAIL_STEPS):
        live = np.flatnonzero(~done)
        if not len(live):
            break
        parts = evaluator.graded(u[live])
        v = parts[d].copy()
        for k in range(d):
            # r runs to -inf on homogeneous orbits; exp would give inf * 0
            if not np.any(parts[k]):
                continue
            v += np.exp((k - d) * r[live])[:, None] * parts[k]
        norms = np.linalg.norm(v, axis=1)
        log_norms = np.log(norms)
        r[live] = d * r[live] + log_norms
        u[live] = v / norms[:, None]
        steps[live] += 1
        # the tail is bounded by |log |v|| / (d^n (d - 1))
        bound = np.log1p(np.abs(log_norms)) - math.log(tol)
        done[live] = steps[live] * log_d >= bound
    return r * np.exp(-steps * log_d)


def escape_rates(F: PolynomialMap, points, params: EscapeParameters = None):
    """
    Vectorized :func:`escape_orbit`.

    :return: ``(values, escaped, iterations)`` arrays; non-escaping points
        get value 0 and iteration count ``cap``.
    """
    params = escape_parameters(F) if params is None else params
    z = as_points(points, F.N).copy()
    K = len(z)
    evaluator = F.float_evaluator
    values = np.zeros(K)
    escaped = np.zeros(K, dtype=bool)
    iterations = np.full(K, params.cap)
    active = np.arange(K)
    r0 = np.zeros(K)
    u0 = np.zeros_like(z)
    for n in range(params.cap + 1):
        norms = np.linalg.norm(z, axis=1)
        out = norms > params.radius
        if np.any(out):
            idx = active[out]
            escaped[idx] = True
            iterations[idx] = n
            r0[idx] = np.log(norms[out])
            u0[idx] = z[out] / norms[out][:, None]
            active, z = active[~out], z[~out]
        if n == params.cap or not len(active):
            break
        z = evaluator(z)
    idx = np.flatnonzero(escaped)
    if len(idx):
        d = F.degree
        values[idx] = _tail(F, r0[idx], u0[idx], params.tol) * \
            np.power(float(d), -iterations[idx].astype(float))
    return values, escaped, iterations


def escape_orbit(F: PolynomialMap, z,
                 params: EscapeParameters = None) -> EscapeResult:
    """
    ``G^F(z) = lim d^-n log+ |F^n(z)|`` with its escape flag and the number
    of plain iterations before the orbit left the escape radius.
    """
    values, escaped, iterations = escape_rates(F, [z], params)
    return EscapeResult(float(values[0]), bool(escaped[0]),
                        int(iterations[0]))


def escape_rate(F: PolynomialMap, z, params: EscapeParameters = None) -> float:
    """
    ``G^F(z)``; 0 if the orbit stays inside the escape radius for the whole
    iteration cap.
    """
    result = escape_orbit(F, z, params)
    if not result.escaped:
        logger.debug(f'{z} did not escape; treated as bounded')
    return result.value


def green_on_sphere(F_h: PolynomialMap, points,
                    tol: float = DEFAULT_ESCAPE_TOL) -> np.ndarray:
    """
    ``g^F(u) = sum_k d^-(k+1) log |F_h(u_k)|`` for unit vectors `u`, where
    ``u_{k+1} = F_h(u_k) / |F_h(u_k)|``. For homogeneous maps this is
    ``G^F`` on the unit sphere.

    :raises PreconditionFailure: If `F_h` is not homogeneous.
    """
    if not F_h.is_homogeneous():
        raise PreconditionFailure(reason='g^F needs a homogeneous map')
    u = as_points(points, F_h.N).copy()
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    return _tail(F_h, np.zeros(len(u)), u, tol)


def green_samples(F_h: PolynomialMap, points,
                  tol: float = DEFAULT_ESCAPE_TOL):
    pts = as_points(points, F_h.N)
    return [GreenSample(p, v)
            for p, v in zip(pts, green_on_sphere(F_h, pts, tol))]


def green_bound(F_h: PolynomialMap, samples: int = DEFAULT_SPHERE_SAMPLES,
                seed=0) -> float:
    """
    ``1 + max(|log m|, |log M|)`` from the sphere extrema of ``|F_h|``;
    ``|g^F|`` never exceeds it.
    """
    m = min_leading_norm_on_sphere(F_h, samples, seed)
    M = max_leading_norm_on_sphere(F_h, samples, seed)
    if not m > 0:
        raise RegularityAdvisoryError(minimum=m)
    return 1.0 + max(abs(math.log(m)), abs(math.log(M)))
