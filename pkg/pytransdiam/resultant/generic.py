"""
The fully expanded resultant of three generic ternary quadratics.

The expansion goes through the classical 6x6 determinant whose rows are the
coefficient vectors of ``F_1, F_2, F_3`` and of the three partial
derivatives of their Jacobian determinant, all in the basis of quadratic
monomials. The determinant is a constant multiple of the resultant; the
constant is read off the pure square system.
"""
import itertools
import logging
import random
from fractions import Fraction
from typing import Dict, List

from pytransdiam.data._holders import ExpansionStats
from pytransdiam.polycore.monomials import exponents_of_degree
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.polycore.polynomial import SparsePolynomial, parameter_ring
from pytransdiam.resultant.bareiss import det3
from pytransdiam.resultant.macaulay import resultant_exact
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import ResultantBudgetExceeded

logger = logging.getLogger(__name__)

PARAMETERS = 18
DEFAULT_MAX_TERMS = 500000


def parameter_names() -> List[str]:
    """``a0..a5, b0..b5, c0..c5`` in quadratic monomial order."""
    return [f'{letter}{k}' for letter in 'abc' for k in range(6)]


def generic_quadratic_ternary_map() -> PolynomialMap:
    """
    Three generic ternary quadratics over the ``SYMBOLIC_GENERIC`` domain;
    ``F_i`` has coefficient parameter ``6 i + k`` on the k-th quadratic
    monomial.
    """
    params = parameter_ring(PARAMETERS)
    quads = exponents_of_degree(3, 2)
    return PolynomialMap([
        SparsePolynomial(3, {e: params[6 * i + k]
                             for k, e in enumerate(quads)},
                         ScalarDomain.SYMBOLIC_GENERIC)
        for i in range(3)])


def _budget(poly: SparsePolynomial, max_terms, stage: str, done: int):
    if max_terms is not None and len(poly) > max_terms:
        err = ResultantBudgetExceeded(budget=max_terms, stage=stage,
                                      terms=len(poly))
        err.partial = {'stage': stage, 'terms': len(poly),
                       'degree': poly.degree, 'minors_done': done}
        raise err


def _jacobian_rows(max_terms) -> List[Dict[tuple, SparsePolynomial]]:
    """
    Coefficients of ``dJ/dx``, ``dJ/dy``, ``dJ/dz`` on the quadratic
    monomials, as polynomials in the 18 parameters.
    """
    total = PARAMETERS + 3
    quads = exponents_of_degree(3, 2)
    forms = []
    for i in range(3):
        terms = {}
        for k, e in enumerate(quads):
            exps = [0] * total
            exps[6 * i + k] = 1
            exps[PARAMETERS:] = e
            terms[tuple(exps)] = 1
        forms.append(SparsePolynomial(total, terms))
    xyz = range(PARAMETERS, total)
    jac = [[f.derivative(j) for j in xyz] for f in forms]
    J = det3(jac)
    _budget(J, max_terms, 'jacobian', 0)
    logger.debug(f'Jacobian determinant: {len(J)} terms')
    rows = []
    for j in xyz:
        rows.append(J.derivative(j).collect(list(xyz)))
    return rows


def resultant_generic_quadratic_ternary(
        max_terms: int = DEFAULT_MAX_TERMS) -> SparsePolynomial:
    """
    Expand ``Res`` of three generic ternary quadratics over the integers.

    Variables of the result are the 18 coefficient parameters, see
    :func:`parameter_names`.

    :param max_terms: Abort once an intermediate or partial sum exceeds this
        many terms; ``None`` disables the check.
    :raises ResultantBudgetExceeded: With the statistics gathered so far in
        its ``partial`` attribute.
    """
    params = parameter_ring(PARAMETERS)
    quads = exponents_of_degree(3, 2)
    zero = SparsePolynomial.zero(PARAMETERS)
    top = [[params[6 * i + k] for k in range(6)] for i in range(3)]
    bottom = [[row.get(e, zero) for e in quads]
              for row in _jacobian_rows(max_terms)]

    total = zero
    done = 0
    # Laplace expansion along the three coefficient rows
    for cols in itertools.combinations(range(6), 3):
        rest = [c for c in range(6) if c not in cols]
        upper = det3([[row[c] for c in cols] for row in top])
        lower = det3([[row[c] for c in rest] for row in bottom])
        _budget(lower, max_terms, 'minor', done)
        term = upper * lower
        if (3 + sum(cols)) % 2:
            term = -term
        total = total + term
        done += 1
        _budget(total, max_terms, 'accumulate', done)
        logger.debug(f'minor {cols}: partial sum {len(total)} terms')

    normalizer = total.evaluate(pure_square_point())
    logger.info(f'6x6 determinant on the pure squares: {normalizer}')
    res = total.exact_div(Fraction(normalizer))
    if any(Fraction(c).denominator != 1 for c in res.terms.values()):
        logger.warning('expanded resultant has non-integral coefficients')
    return res


def pure_square_point() -> List[Fraction]:
    """Parameter values of ``(x^2, y^2, z^2)``."""
    point = [Fraction(0)] * PARAMETERS
    quads = exponents_of_degree(3, 2)
    for i in range(3):
        square = tuple(2 if j == i else 0 for j in range(3))
        point[6 * i + quads.index(square)] = Fraction(1)
    return point


def expansion_stats(poly: SparsePolynomial) -> ExpansionStats:
    return ExpansionStats(len(poly), poly.degree)


def specialize_map(values) -> PolynomialMap:
    """The ternary quadratic map with the given 18 coefficients."""
    quads = exponents_of_degree(3, 2)
    return PolynomialMap([
        SparsePolynomial(3, {e: values[6 * i + k]
                             for k, e in enumerate(quads)})
        for i in range(3)])


def specialization_check(res: SparsePolynomial, trials: int = 5, seed=0,
                         low: int = -3, high: int = 3) -> bool:
    """
    Compare `res` at random integer coefficient vectors with the Macaulay
    engine on the specialized map.
    """
    rng = random.Random(seed)
    for trial in range(trials):
        values = [Fraction(rng.randint(low, high)) for _ in range(PARAMETERS)]
        try:
            poly_map = specialize_map(values)
        except ValueError:
            continue
        expected = resultant_exact(poly_map)
        got = res.evaluate(values)
        if got != expected:
            logger.warning(f'specialization {trial} disagrees: '
                           f'{got} != {expected}')
            return False
    return True
