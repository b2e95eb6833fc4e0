"""
Array helpers shared by the float code paths.
"""
import numpy as np


def as_points(points, dimension: int = None) -> np.ndarray:
    """
    Coerce `points` to a 2-d complex array of shape ``(K, N)``. A 1-d input
    is read as K points when `dimension` is 1 and as a single point
    otherwise.
    """
    arr = np.asarray(points, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        if dimension == 1:
            arr = arr.reshape(-1, 1)
        else:
            arr = arr.reshape(1, -1)
    return arr


def power_table(points: np.ndarray, max_power: int) -> np.ndarray:
    """
    ``table[k, j, a] = points[k, j] ** a`` for ``0 <= a <= max_power`` by
    repeated multiplication, so ``0 ** 0 == 1``.
    """
    K, N = points.shape
    table = np.empty((K, N, max_power + 1), dtype=np.complex128)
    table[:, :, 0] = 1.0
    for a in range(1, max_power + 1):
        table[:, :, a] = table[:, :, a - 1] * points
    return table


def monomial_values(points: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """
    Evaluate every monomial of `exponents` (shape ``(M, N)``) at every
    point (shape ``(K, N)``); returns the ``(K, M)`` matrix.
    """
    K, N = points.shape
    if exponents.size == 0:
        return np.ones((K, 0), dtype=np.complex128)
    table = power_table(points, int(exponents.max()))
    out = np.ones((K, exponents.shape[0]), dtype=np.complex128)
    for j in range(N):
        out *= table[:, j, exponents[:, j]]
    return out


def row_norms(points: np.ndarray) -> np.ndarray:
    return np.linalg.norm(points, axis=1)


def random_unit_vectors(rng: np.random.Generator, count: int,
                        dimension: int) -> np.ndarray:
    """Uniform points on the unit sphere of C^N (Gaussian normalize)."""
    z = (rng.standard_normal((count, dimension))
         + 1j * rng.standard_normal((count, dimension)))
    return z / np.linalg.norm(z, axis=1, keepdims=True)
