"""
Fraction-free determinants over exact rings.
"""
from typing import Callable, List, Sequence


def _exact_div(a, b):
    if not a:
        return a
    if hasattr(a, 'exact_div'):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f'{b} does not divide {a}')
        return q
    return a / b


def bareiss_determinant(matrix: Sequence[Sequence],
                        exact_div: Callable = None):
    """
    Determinant by Bareiss' fraction-free elimination.

    Works over any commutative ring whose elements support ``+``, ``-``,
    ``*``, truthiness for zero and an exact division (integers, fractions,
    Gaussian rationals, :class:`SparsePolynomial`).

    :param matrix: Square matrix as a sequence of rows.
    :param exact_div: ``exact_div(a, b)`` returning ``a / b`` when ``b``
        divides ``a``. Defaults to the ``exact_div`` method when the element
        has one and ``/`` otherwise.
    :return: The determinant, ``1`` for the empty matrix.
    """
    div = exact_div or _exact_div
    n = len(matrix)
    if n == 0:
        return 1
    M: List[list] = [list(row) for row in matrix]
    if any(len(row) != n for row in M):
        raise ValueError('bareiss_determinant needs a square matrix')
    if n == 1:
        return M[0][0]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not M[k][k]:
            # look for a pivot in the current column, det == 0 if none
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return M[k][k]
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            m_ik = row_i[k]
            for j in range(k + 1, n):
                elt = pivot * row_i[j] - m_ik * row_k[j]
                if prev is not None:
                    elt = div(elt, prev)
                row_i[j] = elt
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def det3(m: Sequence[Sequence]):
    """Cofactor expansion of a 3x3 matrix."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
