"""
Macaulay's construction of the multiresultant of N homogeneous forms of a
common degree d in N variables.

Monomials of the critical degree ``D* = N(d - 1) + 1`` are split by the
first variable (in a priority order) whose d-th power divides them; the
row of a monomial ``m`` assigned to variable ``i`` holds the coefficients of
``(m / x_i^d) * F_i``. The resultant is the quotient of the full
determinant by the minor on the non-reduced monomials, i.e. those divisible
by more than one ``x_j^d``.
"""
import itertools
import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from pytransdiam.decorators import lazy_property, memoize
from pytransdiam.polycore.monomials import Exponents, exponents_of_degree
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.polycore.polynomial import SparsePolynomial
from pytransdiam.resultant.bareiss import _exact_div, bareiss_determinant
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import (DenominatorSingularError,
                                          MalformedMapError,
                                          UnsupportedDomainError)

logger = logging.getLogger(__name__)

# permutations tried before the perturbation fallback
MAX_PRIORITIES = 24


def critical_degree(N: int, d: int) -> int:
    return N * (d - 1) + 1


def _check_homogeneous(F_h: PolynomialMap):
    if not F_h.is_homogeneous():
        raise MalformedMapError(
                reason='the resultant needs homogeneous components; '
                       'pass leading_part(F)')


class MacaulayInstance(object):
    """
    The Macaulay matrices of a homogeneous map for one variable priority.

    :param F_h: A homogeneous :class:`PolynomialMap`.
    :param priority: Order in which variables claim monomials; defaults to
        ``(0, 1, ..., N - 1)``.
    """

    def __init__(self, F_h: PolynomialMap, priority: Sequence[int] = None):
        _check_homogeneous(F_h)
        self.F_h = F_h
        self.N = F_h.N
        self.d = F_h.degree
        self.priority = tuple(priority) if priority is not None else \
            tuple(range(self.N))
        if sorted(self.priority) != list(range(self.N)):
            raise ValueError(f'priority {self.priority} is not a permutation')
        self.critical_degree = critical_degree(self.N, self.d)
        self.monomials: Tuple[Exponents, ...] = exponents_of_degree(
                self.N, self.critical_degree)
        self.assignment = [self._assign(m) for m in self.monomials]
        self.non_reduced = [k for k, m in enumerate(self.monomials)
                            if sum(a >= self.d for a in m) > 1]

    def _assign(self, m: Exponents) -> int:
        for i in self.priority:
            if m[i] >= self.d:
                return i
        raise AssertionError(f'{m} is not divisible by any d-th power')

    def _zero(self):
        if self.F_h.domain is ScalarDomain.SYMBOLIC_GENERIC:
            some = next(iter(self.F_h[0].terms.values()))
            return SparsePolynomial.zero(some.dimension)
        return 0

    @lazy_property
    def numerator_matrix(self) -> List[list]:
        index = {m: k for k, m in enumerate(self.monomials)}
        zero = self._zero()
        rows = []
        for m, i in zip(self.monomials, self.assignment):
            shift = list(m)
            shift[i] -= self.d
            row = [zero] * len(self.monomials)
            for e, c in self.F_h[i].terms.items():
                row[index[tuple(a + b for a, b in zip(shift, e))]] = c
            rows.append(row)
        return rows

    @lazy_property
    def denominator_matrix(self) -> List[list]:
        num = self.numerator_matrix
        return [[num[r][c] for c in self.non_reduced]
                for r in self.non_reduced]

    def numerator(self):
        return bareiss_determinant(self.numerator_matrix)

    def denominator(self):
        return bareiss_determinant(self.denominator_matrix)

    def __repr__(self):
        return (f'MacaulayInstance(N={self.N}, d={self.d}, '
                f'D*={self.critical_degree}, size={len(self.monomials)}, '
                f'minor={len(self.non_reduced)}, priority={self.priority})')


def pure_powers(N: int, d: int, domain=ScalarDomain.EXACT_RATIONAL):
    return PolynomialMap.diagonal([1] * N, d, domain)


@memoize
def sign_normalizer(N: int, d: int, priority: Tuple[int, ...]) -> int:
    """
    The quotient the construction gives on ``(z_1^d, ..., z_N^d)``; the
    resultant is the quotient divided by this value.
    """
    inst = MacaulayInstance(pure_powers(N, d), priority)
    value = Fraction(inst.numerator()) / inst.denominator()
    if value not in (1, -1):
        raise ArithmeticError(f'Normalizer {value} is not a unit')
    if value != 1:
        logger.warning(f'Priority {priority} gives {value} on pure powers; '
                       f'negating.')
    return int(value)


def priorities(N: int, limit: int = MAX_PRIORITIES):
    """Identity first, then the other permutations up to `limit`."""
    return list(itertools.islice(itertools.permutations(range(N)), limit))


def resultant_exact(F_h: PolynomialMap, max_priorities: int = MAX_PRIORITIES):
    """
    The multiresultant ``Res(F_h)``, normalized so the pure power system has
    resultant 1.

    :param F_h: Homogeneous map over ``EXACT_RATIONAL``,
        ``GAUSSIAN_RATIONAL`` or ``SYMBOLIC_GENERIC``.
    :param max_priorities: How many variable priorities to try when the
        denominator minor vanishes.
    :return: An exact scalar (``Fraction``, ``GaussianRational``) or, for the
        symbolic domain, a :class:`SparsePolynomial` in the coefficient
        parameters.
    :raises UnsupportedDomainError: For complex float maps.
    :raises DenominatorSingularError: When every priority fails on a
        symbolic map.
    """
    _check_homogeneous(F_h)
    if not F_h.domain.is_exact:
        raise UnsupportedDomainError(operation='resultant_exact',
                                     domain=F_h.domain.name)
    N, d = F_h.N, F_h.degree
    if N == 1:
        return F_h[0].coefficient((d,))
    tried = 0
    for priority in priorities(N, max_priorities):
        inst = MacaulayInstance(F_h, priority)
        den = inst.denominator()
        tried += 1
        if not den:
            logger.debug(f'Macaulay denominator vanished for priority '
                         f'{priority}')
            continue
        num = inst.numerator()
        value = _quotient(num, den)
        if sign_normalizer(N, d, priority) != 1:
            value = -value
        return value
    if F_h.domain is ScalarDomain.SYMBOLIC_GENERIC:
        raise DenominatorSingularError(tried=tried)
    logger.warning(f'All {tried} Macaulay partitions have a vanishing '
                   f'denominator; using the perturbation limit.')
    return perturbation_limit(F_h)


def _quotient(num, den):
    if isinstance(num, SparsePolynomial):
        return num.exact_div(den)
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


def perturbation_limit(F_h: PolynomialMap):
    """
    ``Res(F_h)`` as the value at ``t = 0`` of
    ``Res(F_h + t (z_1^d, ..., z_N^d))``, computed as the ratio of the
    trailing coefficients of the two Macaulay determinants in ``Q[t]``.
    """
    N, d = F_h.N, F_h.degree
    domain = F_h.domain
    inst = MacaulayInstance(F_h)
    powers = MacaulayInstance(pure_powers(N, d), inst.priority)

    def combine(a, b):
        return SparsePolynomial(1, {(0,): a, (1,): b}, domain)

    def lift(m1, m2):
        return [[combine(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(m1, m2)]

    num = bareiss_determinant(lift(inst.numerator_matrix,
                                   powers.numerator_matrix), _exact_div)
    den = bareiss_determinant(lift(inst.denominator_matrix,
                                   powers.denominator_matrix), _exact_div)
    if not isinstance(den, SparsePolynomial):
        den = SparsePolynomial.constant(1, den, domain)
    if not isinstance(num, SparsePolynomial):
        num = SparsePolynomial.constant(1, num, domain)
    order = min(e[0] for e in den.terms)
    if num and min(e[0] for e in num.terms) < order:
        raise ArithmeticError('numerator vanishes to lower order than the '
                              'denominator')
    value = _quotient(num.coefficient((order,)), den.coefficient((order,)))
    if sign_normalizer(N, d, inst.priority) != 1:
        value = -value
    return value


def binary_quadratic_resultant(a1, b1, c1, a2, b2, c2):
    """
    Resultant of ``F_i = a_i z1^2 + b_i z1 z2 + c_i z2^2`` by the classical
    seven term formula.
    """
    return (a1 * a1 * c2 * c2 - 2 * a1 * a2 * c1 * c2 + a2 * a2 * c1 * c1
            - a1 * b1 * b2 * c2 - a2 * b1 * b2 * c1 + a1 * b2 * b2 * c1
            + a2 * b1 * b1 * c2)

