"""
Ultrametric polydiscs and their transfinite diameter.
"""
import logging
from fractions import Fraction
from typing import Sequence

from pytransdiam.polycore.monomials import (count_monomials,
                                            exponents_up_to_degree,
                                            vandermonde_degree)
from pytransdiam.padic.valuation import (UltrametricValue, check_prime,
                                         padic_abs)
from pytransdiam.resultant.bareiss import bareiss_determinant
from pytransdiam.utils.common_utils import parse_rational
from pytransdiam.utils.exceptions import (InvalidDescriptorError,
                                          PreconditionFailure)

logger = logging.getLogger(__name__)


class UltrametricPolydisc(object):
    """
    ``{z : |z_j|_p <= r_j}`` with radii in the value group ``p^Q``.

    :param radii: N nonzero :class:`UltrametricValue` objects of one prime.
    """

    def __init__(self, radii: Sequence[UltrametricValue]):
        radii = tuple(radii)
        if not radii:
            raise InvalidDescriptorError(what='polydisc', reason='no radii')
        primes = {r.prime for r in radii}
        if len(primes) != 1:
            raise InvalidDescriptorError(
                    what='polydisc', reason=f'radii use primes {primes}')
        if any(r.is_zero for r in radii):
            raise InvalidDescriptorError(what='polydisc',
                                         reason='zero radius')
        self.radii = radii

    @classmethod
    def unit(cls, N: int, p: int) -> 'UltrametricPolydisc':
        return cls([UltrametricValue.one(p)] * N)

    @classmethod
    def from_log_p(cls, p: int, exponents) -> 'UltrametricPolydisc':
        return cls([UltrametricValue(p, parse_rational(e)) for e in exponents])

    @classmethod
    def from_descriptor(cls, data: dict) -> 'UltrametricPolydisc':
        """Read ``{"prime": p, "radii_log_p": ["1/2", "0"]}``."""
        try:
            p = check_prime(data['prime'])
            exps = data['radii_log_p']
        except KeyError as e:
            raise InvalidDescriptorError(what='p-adic polydisc',
                                         reason=f'missing {e}')
        try:
            return cls.from_log_p(p, exps)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidDescriptorError(what='p-adic polydisc', reason=str(e))

    def to_descriptor(self) -> dict:
        return {'prime': self.prime,
                'radii_log_p': [str(e) for e in self.exponents]}

    @property
    def N(self) -> int:
        return len(self.radii)

    @property
    def prime(self) -> int:
        return self.radii[0].prime

    @property
    def exponents(self):
        return tuple(r.exponent for r in self.radii)

    def permuted(self, perm: Sequence[int]) -> 'UltrametricPolydisc':
        """The polydisc with coordinate ``k`` taken from coordinate ``perm[k]``."""
        return UltrametricPolydisc([self.radii[i] for i in perm])

    def __contains__(self, point) -> bool:
        point = tuple(point)
        if len(point) != self.N:
            return False
        return all(padic_abs(z, self.prime) <= r
                   for z, r in zip(point, self.radii))

    def __eq__(self, other):
        if not isinstance(other, UltrametricPolydisc):
            return NotImplemented
        return self.radii == other.radii

    def __hash__(self):
        return hash(self.radii)

    def __repr__(self):
        return f'UltrametricPolydisc({[str(r) for r in self.radii]})'


def polydisc_diam_p(D: UltrametricPolydisc) -> UltrametricValue:
    """
    ``d_inf(D)_p = (r_1 ... r_N)^(1/N)``.

    Every d_n already equals this value: the monomial sup norm bound on the
    Vandermonde gives ``prod_j r_j^(s_j(n) / D(n))`` with ``s_j(n) = D(n)/N``
    and it is attained by points with distinct residues.
    """
    return UltrametricValue(D.prime, sum(D.exponents) / Fraction(D.N))


def polydisc_dn_p(D: UltrametricPolydisc, n: int) -> UltrametricValue:
    """Closed form ``d_n(D)_p`` from the monomial degree counts."""
    if n < 1:
        raise ValueError('n must be at least 1')
    Dn = vandermonde_degree(D.N, n)
    exps = exponents_up_to_degree(D.N, n)
    total = Fraction(0)
    for j, e in enumerate(D.exponents):
        s_j = sum(m[j] for m in exps)
        total += e * Fraction(s_j, Dn)
    return UltrametricValue(D.prime, total)


def lattice_points(D: UltrametricPolydisc, n: int):
    """
    The principal lattice ``{a : a_j >= 0, sum a <= n}`` scaled so that
    coordinate ``j`` has absolute value ``r_j``; needs integral exponents.
    """
    p = D.prime
    if any(e.denominator != 1 for e in D.exponents):
        raise PreconditionFailure(reason='lattice points need integral '
                                         'radius exponents')
    scales = [Fraction(p) ** -int(e) for e in D.exponents]
    return [tuple(a_j * s for a_j, s in zip(a, scales))
            for a in exponents_up_to_degree(D.N, n)]


def polydisc_dn_p_lattice(D: UltrametricPolydisc, n: int) -> UltrametricValue:
    """
    ``d_n(D)_p`` from an exact Vandermonde determinant on scaled principal
    lattice points. For ``p > n`` the lattice determinant is a product of
    factorials below p, so the configuration attains the sup and the result
    must equal :func:`polydisc_diam_p`.
    """
    if D.prime <= n:
        raise PreconditionFailure(reason=f'lattice check needs p > n, got '
                                         f'p = {D.prime}, n = {n}')
    points = lattice_points(D, n)
    exps = exponents_up_to_degree(D.N, n)
    matrix = []
    for z in points:
        row = []
        for m in exps:
            v = Fraction(1)
            for zj, a in zip(z, m):
                if a:
                    v *= zj ** a
            row.append(v)
        matrix.append(row)
    if len(matrix) != count_monomials(D.N, n):
        raise AssertionError('lattice size mismatch')
    det = bareiss_determinant(matrix)
    return padic_abs(det, D.prime) ** Fraction(1, vandermonde_degree(D.N, n))
