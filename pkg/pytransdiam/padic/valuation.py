"""
Exact p-adic absolute values of rationals.
"""
import logging
from fractions import Fraction
from functools import total_ordering

import sympy

from pytransdiam.decorators import memoize
from pytransdiam.utils.exceptions import NotPrimeError

logger = logging.getLogger(__name__)


@memoize
def check_prime(p) -> int:
    try:
        value = int(p)
    except (TypeError, ValueError):
        raise NotPrimeError(p=p)
    if value != p or not sympy.isprime(value):
        raise NotPrimeError(p=p)
    return value


@total_ordering
class UltrametricValue(object):
    """
    The absolute value ``p^e`` with an exact rational exponent `e`, or the
    distinguished zero value (``exponent is None``).

    Multiplication adds exponents and rational powers scale them, so no
    operation on these values ever rounds.
    """

    __slots__ = ('prime', 'exponent')

    def __init__(self, prime: int, exponent=0):
        self.prime = check_prime(prime)
        self.exponent = None if exponent is None else Fraction(exponent)

    @classmethod
    def zero(cls, prime: int) -> 'UltrametricValue':
        return cls(prime, None)

    @classmethod
    def one(cls, prime: int) -> 'UltrametricValue':
        return cls(prime, 0)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    @property
    def log_p(self) -> Fraction:
        """The exponent ``e``; ``-inf`` is not representable so zero raises."""
        if self.is_zero:
            raise ArithmeticError('log_p of the zero value')
        return self.exponent

    def _check(self, other: 'UltrametricValue'):
        if not isinstance(other, UltrametricValue):
            raise TypeError(f'Expected UltrametricValue, got {type(other)}')
        if other.prime != self.prime:
            raise ValueError(f'Mixed primes {self.prime} and {other.prime}')

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return UltrametricValue.zero(self.prime)
        return UltrametricValue(self.prime, self.exponent + other.exponent)

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError('division by the zero value')
        if self.is_zero:
            return self
        return UltrametricValue(self.prime, self.exponent - other.exponent)

    def __pow__(self, r):
        r = Fraction(r)
        if self.is_zero:
            if r <= 0:
                raise ZeroDivisionError('nonpositive power of the zero value')
            return self
        return UltrametricValue(self.prime, self.exponent * r)

    def __eq__(self, other):
        if not isinstance(other, UltrametricValue):
            return NotImplemented
        return self.prime == other.prime and self.exponent == other.exponent

    def __lt__(self, other):
        self._check(other)
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.exponent < other.exponent

    def __hash__(self):
        return hash((self.prime, self.exponent))

    def __float__(self):
        if self.is_zero:
            return 0.0
        return float(self.prime) ** float(self.exponent)

    def __repr__(self):
        return f'UltrametricValue({self.prime}, {self.exponent})'

    def __str__(self):
        if self.is_zero:
            return '0'
        return f'{self.prime}^({self.exponent})'

    def to_json(self) -> dict:
        if self.is_zero:
            return {'prime': self.prime, 'zero': True}
        return {'prime': self.prime, 'exponent': str(self.exponent)}


def valuation(x, p: int) -> int:
    """
    ``v_p(x)`` for a nonzero rational: the power of `p` in the numerator
    minus the power in the denominator.
    """
    p = check_prime(p)
    x = Fraction(x)
    if not x:
        raise ValueError('the valuation of 0 is infinite')
    v = 0
    if abs(x.numerator) != 1:
        v += int(sympy.multiplicity(p, abs(x.numerator)))
    if x.denominator != 1:
        v -= int(sympy.multiplicity(p, x.denominator))
    return v


def padic_abs(x, p: int) -> UltrametricValue:
    """
    ``|x|_p = p^(-v_p(x))``, normalized so that ``|p|_p = 1/p``. Zero maps
    to the distinguished zero value.

    :raises NotPrimeError: If `p` is not a prime.
    """
    p = check_prime(p)
    x = Fraction(x)
    if not x:
        return UltrametricValue.zero(p)
    return UltrametricValue(p, -valuation(x, p))


def is_p_integral(x, p: int) -> bool:
    x = Fraction(x)
    return not x or valuation(x, p) >= 0
