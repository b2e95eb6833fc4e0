"""
Scalar values for the exact domains and coercion between domains.
"""
from fractions import Fraction
from numbers import Complex, Rational

from pytransdiam.utils.common_utils import is_decimal_literal, parse_rational
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import UnsupportedDomainError


class GaussianRational(object):
    """An element ``re + im*i`` of Q(i) with :class:`Fraction` parts."""

    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        object.__setattr__(self, 're', Fraction(re))
        object.__setattr__(self, 'im', Fraction(im))

    def __setattr__(self, key, value):
        raise AttributeError('GaussianRational is immutable')

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(value, 0)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, float):
            return cls(Fraction(value), 0)
        raise TypeError(f'Cannot coerce {value!r} to GaussianRational')

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = other.norm()
        if not n:
            raise ZeroDivisionError('division by zero in Q(i)')
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, Complex):
            return complex(self) == complex(other)
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f'GaussianRational({self.re}, {self.im})'

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f'{self.im}i'
        sign = '+' if self.im > 0 else '-'
        return f'{self.re}{sign}{abs(self.im)}i'


def coerce_scalar(value, domain: ScalarDomain):
    """
    Convert `value` into the representation `domain` uses for its
    coefficients.
    """
    if domain is ScalarDomain.COMPLEX_FLOAT:
        return complex(value)
    if domain is ScalarDomain.EXACT_RATIONAL:
        if isinstance(value, GaussianRational):
            if value.im:
                raise UnsupportedDomainError(operation='imaginary coefficient',
                                             domain=domain.name)
            return value.re
        if isinstance(value, complex):
            raise UnsupportedDomainError(operation='complex float coefficient',
                                         domain=domain.name)
        return Fraction(value)
    if domain is ScalarDomain.GAUSSIAN_RATIONAL:
        return GaussianRational.coerce(value)
    if domain is ScalarDomain.SYMBOLIC_GENERIC:
        return value
    raise UnsupportedDomainError(operation='coerce_scalar', domain=domain)


def parse_coefficient(re_text, im_text='0', exact=False):
    """
    Parse the ``{"re": ..., "im": ...}`` coefficient strings of the map
    schema. Returns the value and the narrowest domain that holds it.
    """
    decimal = is_decimal_literal(re_text) or is_decimal_literal(im_text)
    if decimal and not exact:
        value = complex(float(parse_rational(re_text)),
                        float(parse_rational(im_text)))
        return value, ScalarDomain.COMPLEX_FLOAT
    re, im = parse_rational(re_text), parse_rational(im_text)
    if im:
        return GaussianRational(re, im), ScalarDomain.GAUSSIAN_RATIONAL
    return re, ScalarDomain.EXACT_RATIONAL


def widest_domain(*domains: ScalarDomain) -> ScalarDomain:
    """The domain all of `domains` embed into."""
    domains = set(domains)
    if ScalarDomain.SYMBOLIC_GENERIC in domains:
        return ScalarDomain.SYMBOLIC_GENERIC
    if ScalarDomain.COMPLEX_FLOAT in domains:
        return ScalarDomain.COMPLEX_FLOAT
    if ScalarDomain.GAUSSIAN_RATIONAL in domains:
        return ScalarDomain.GAUSSIAN_RATIONAL
    return ScalarDomain.EXACT_RATIONAL


def scalar_to_json(value) -> dict:
    """Inverse of :func:`parse_coefficient`."""
    if isinstance(value, GaussianRational):
        return {'re': str(value.re), 'im': str(value.im)}
    if isinstance(value, complex):
        return {'re': repr(value.real), 'im': repr(value.imag)}
    if isinstance(value, float):
        return {'re': repr(value), 'im': '0'}
    return {'re': str(Fraction(value)), 'im': '0'}
