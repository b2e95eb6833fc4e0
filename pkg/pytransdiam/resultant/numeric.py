"""
Floating point multiresultants through LU factorizations of the Macaulay
matrices.
"""
import logging

import numpy as np
from scipy import linalg

from pytransdiam.data._holders import NumericResultant
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.resultant.macaulay import (MAX_PRIORITIES, MacaulayInstance,
                                            _check_homogeneous,
                                            priorities, resultant_exact,
                                            sign_normalizer)
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import DenominatorSingularError

logger = logging.getLogger(__name__)

# condition numbers above this are flagged
ILL_CONDITION = 1e10
# denominators with a larger condition number count as singular
SINGULAR_CONDITION = 1e14


def _lu_det(matrix: np.ndarray):
    """Determinant and 1-norm condition estimate of a square matrix."""
    if matrix.size == 0:
        return 1.0 + 0j, 1.0
    lu, piv = linalg.lu_factor(matrix, check_finite=True)
    diag = np.diag(lu)
    swaps = np.count_nonzero(piv != np.arange(len(piv)))
    det = np.prod(diag) * (-1) ** swaps
    if np.any(diag == 0):
        return 0j, np.inf
    cond = np.linalg.cond(matrix, 1)
    return complex(det), float(cond)


def _as_array(rows) -> np.ndarray:
    return np.array([[complex(c) for c in row] for row in rows],
                    dtype=np.complex128)


def resultant_numeric(F_h: PolynomialMap,
                      max_priorities: int = MAX_PRIORITIES) -> NumericResultant:
    """
    ``Res(F_h)`` in complex floating point.

    Coefficients are scaled to unit maximum modulus first and the result is
    rescaled by ``s^(N d^(N-1))``, the total degree of the resultant. A
    denominator minor that is numerically singular moves on to the next
    variable priority.

    :return: :class:`NumericResultant` with the value, a condition figure
        (the larger 1-norm condition number of the two matrices), an
        ill-conditioned flag and the priority used.
    :raises DenominatorSingularError: If no priority has a usable
        denominator.
    """
    _check_homogeneous(F_h)
    F_h = F_h.to_domain(ScalarDomain.COMPLEX_FLOAT)
    N, d = F_h.N, F_h.degree
    if N == 1:
        return NumericResultant(complex(F_h[0].coefficient((d,))), 1.0,
                                False, (0,))
    scale = max(abs(c) for p in F_h for c in p.terms.values())
    G = PolynomialMap([p.scale(1.0 / scale) for p in F_h])
    exponent = N * d ** (N - 1)
    tried = 0
    for priority in priorities(N, max_priorities):
        inst = MacaulayInstance(G, priority)
        den, den_cond = _lu_det(_as_array(inst.denominator_matrix))
        tried += 1
        if den == 0 or den_cond > SINGULAR_CONDITION:
            logger.debug(f'numerically singular denominator (cond '
                         f'{den_cond:.3g}) for priority {priority}')
            continue
        num, num_cond = _lu_det(_as_array(inst.numerator_matrix))
        value = num / den * scale ** exponent
        value *= sign_normalizer(N, d, priority)
        cond = max(num_cond, den_cond)
        ill = not np.isfinite(cond) or cond > ILL_CONDITION
        if ill:
            logger.warning(f'ill-conditioned resultant: condition {cond:.3g}')
        return NumericResultant(complex(value), cond, ill, priority)
    raise DenominatorSingularError(tried=tried)


def abs_resultant(F: PolynomialMap) -> float:
    """``|Res(leading_part(F))|``, exact where the map is exact."""
    F_h = F.leading_part()
    if F_h.domain.is_exact:
        return abs(complex(resultant_exact(F_h)))
    return abs(resultant_numeric(F_h).value)


def is_regular(F: PolynomialMap) -> bool:
    """True iff ``Res(leading_part(F)) != 0``."""
    F_h = F.leading_part()
    if F_h.domain.is_exact:
        return bool(resultant_exact(F_h))
    res = resultant_numeric(F_h)
    return abs(res.value) > 0 and not res.ill_conditioned
