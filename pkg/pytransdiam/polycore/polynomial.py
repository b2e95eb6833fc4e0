"""
Sparse multivariate polynomials over a pluggable scalar domain.
"""
import heapq
import logging
import math
from fractions import Fraction
from operator import add
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from pytransdiam.polycore.monomials import (Exponents, Monomial,
                                            format_monomial, grlex_key)
from pytransdiam.polycore.scalars import (GaussianRational, coerce_scalar,
                                          widest_domain)
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          UnsupportedDomainError)

logger = logging.getLogger(__name__)


class SparsePolynomial(object):
    """
    A polynomial in `dimension` variables stored as a table from exponent
    tuples to nonzero coefficients.

    Instances are immutable. Coefficients live in `domain`; for
    ``SYMBOLIC_GENERIC`` the coefficients are themselves
    :class:`SparsePolynomial` objects over ``EXACT_RATIONAL`` in a separate
    parameter ring.

    :param dimension: The number of variables N.
    :param terms: Mapping of exponent tuple (or :class:`Monomial`) to
        coefficient. Zero coefficients are dropped and repeated exponents are
        summed.
    :param domain: A :class:`ScalarDomain` or its name.
    """

    __slots__ = ('_dimension', '_terms', '_domain')

    def __init__(self, dimension: int, terms=None,
                 domain=ScalarDomain.EXACT_RATIONAL):
        domain = ScalarDomain.check_if_valid(domain)
        dimension = int(dimension)
        if dimension < 1:
            raise DimensionMismatchError(expected='N >= 1', provided=dimension)
        clean = {}
        for exps, c in dict(terms or {}).items():
            if isinstance(exps, Monomial):
                exps = exps.exponents
            exps = tuple(int(a) for a in exps)
            if len(exps) != dimension:
                raise DimensionMismatchError(expected=dimension,
                                             provided=len(exps))
            if any(a < 0 for a in exps):
                raise ValueError(f'Negative exponent in {exps}')
            c = coerce_scalar(c, domain)
            if exps in clean:
                c = clean[exps] + c
            clean[exps] = c
        self._init(dimension, {e: c for e, c in clean.items() if c}, domain)

    def _init(self, dimension, terms, domain):
        self._dimension = dimension
        self._terms = terms
        self._domain = domain

    @classmethod
    def _raw(cls, dimension: int, terms: Dict[Exponents, object],
             domain: ScalarDomain) -> 'SparsePolynomial':
        """Build from an already clean table (no zero coefficients)."""
        obj = cls.__new__(cls)
        obj._init(dimension, terms, domain)
        return obj

    # constructors

    @classmethod
    def zero(cls, dimension: int, domain=ScalarDomain.EXACT_RATIONAL):
        return cls(dimension, {}, domain)

    @classmethod
    def constant(cls, dimension: int, value,
                 domain=ScalarDomain.EXACT_RATIONAL):
        return cls(dimension, {(0,) * dimension: value}, domain)

    @classmethod
    def variable(cls, dimension: int, index: int,
                 domain=ScalarDomain.EXACT_RATIONAL):
        exps = [0] * dimension
        exps[index] = 1
        one = coerce_scalar(1, domain) if domain is not \
            ScalarDomain.SYMBOLIC_GENERIC else None
        if one is None:
            raise UnsupportedDomainError(operation='variable',
                                         domain='SYMBOLIC_GENERIC')
        return cls(dimension, {tuple(exps): one}, domain)

    @classmethod
    def from_monomial(cls, monomial: Monomial, coeff=1,
                      domain=ScalarDomain.EXACT_RATIONAL):
        return cls(monomial.dimension, {monomial.exponents: coeff}, domain)

    # accessors

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def domain(self) -> ScalarDomain:
        return self._domain

    @property
    def terms(self) -> Mapping[Exponents, object]:
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in graded lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]),
                      reverse=True)

    def coefficient(self, exponents) -> object:
        if isinstance(exponents, Monomial):
            exponents = exponents.exponents
        return self._terms.get(tuple(exponents), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self) -> int:
        """Total degree, ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def homogeneous_part(self, k: int) -> 'SparsePolynomial':
        return SparsePolynomial._raw(
                self._dimension,
                {e: c for e, c in self._terms.items() if sum(e) == k},
                self._domain)

    def leading_term(self) -> Tuple[Exponents, object]:
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    # arithmetic

    def _align(self, other: 'SparsePolynomial'):
        if self._dimension != other._dimension:
            raise DimensionMismatchError(expected=self._dimension,
                                         provided=other._dimension)
        if self._domain is other._domain:
            return self, other
        if ScalarDomain.SYMBOLIC_GENERIC in (self._domain, other._domain):
            raise UnsupportedDomainError(operation='mixed arithmetic',
                                         domain='SYMBOLIC_GENERIC')
        domain = widest_domain(self._domain, other._domain)
        return self.to_domain(domain), other.to_domain(domain)

    def __neg__(self):
        return SparsePolynomial._raw(
                self._dimension, {e: -c for e, c in self._terms.items()},
                self._domain)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(self._dimension, other,
                                              self._domain)
        a, b = self._align(other)
        out = dict(a._terms)
        for e, c in b._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return SparsePolynomial._raw(a._dimension, out, a._domain)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(self._dimension, other,
                                              self._domain)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> 'SparsePolynomial':
        """Multiply every coefficient by the scalar `c`."""
        if not c:
            return SparsePolynomial.zero(self._dimension, self._domain)
        out = {}
        for e, v in self._terms.items():
            v = v * c
            if v:
                out[e] = v
        return SparsePolynomial._raw(self._dimension, out, self._domain)

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        a, b = self._align(other)
        out = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(map(add, e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return SparsePolynomial._raw(
                a._dimension, {e: c for e, c in out.items() if c}, a._domain)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if self._domain is ScalarDomain.SYMBOLIC_GENERIC:
            if k == 0:
                raise UnsupportedDomainError(operation='pow(0)',
                                             domain='SYMBOLIC_GENERIC')
            result = None
        else:
            result = SparsePolynomial.constant(self._dimension, 1,
                                               self._domain)
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, index: int) -> 'SparsePolynomial':
        """Partial derivative with respect to variable `index`."""
        out = {}
        for e, c in self._terms.items():
            a = e[index]
            if a:
                de = e[:index] + (a - 1,) + e[index + 1:]
                out[de] = c * a
        return SparsePolynomial._raw(self._dimension, out, self._domain)

    def exact_div(self, divisor) -> 'SparsePolynomial':
        """
        Divide by `divisor` when the quotient is a polynomial.

        Multivariate division by leading terms in graded lexicographic order;
        a remainder term that the divisor's leading monomial does not divide
        means the division is not exact.

        :raises ArithmeticError: If `divisor` does not divide `self`.
        """
        if not isinstance(divisor, SparsePolynomial):
            if not divisor:
                raise ZeroDivisionError('exact_div by zero')
            return SparsePolynomial._raw(
                    self._dimension,
                    {e: _coeff_div(c, divisor) for e, c in self._terms.items()},
                    self._domain)
        a, b = self._align(divisor)
        if not b:
            raise ZeroDivisionError('exact_div by the zero polynomial')
        lead_e, lead_c = b.leading_term()
        rest = [(e, c) for e, c in b._terms.items() if e != lead_e]
        rem = dict(a._terms)
        heap = [(-sum(e), e) for e in rem]
        heapq.heapify(heap)
        quotient = {}
        while rem:
            _, e = heapq.heappop(heap)
            c = rem.pop(e, None)
            if c is None:
                continue
            if any(x < y for x, y in zip(e, lead_e)):
                raise ArithmeticError('exact_div: divisor does not divide '
                                      'the polynomial')
            qe = tuple(x - y for x, y in zip(e, lead_e))
            qc = _coeff_div(c, lead_c)
            quotient[qe] = qc
            for de, dc in rest:
                te = tuple(map(add, qe, de))
                v = rem.get(te)
                t = qc * dc
                if v is None:
                    rem[te] = -t
                    heapq.heappush(heap, (-sum(te), te))
                else:
                    v = v - t
                    if v:
                        rem[te] = v
                    else:
                        del rem[te]
        return SparsePolynomial._raw(a._dimension, quotient, a._domain)

    # conversion

    def to_domain(self, domain) -> 'SparsePolynomial':
        domain = ScalarDomain.check_if_valid(domain)
        if domain is self._domain:
            return self
        if self._domain is ScalarDomain.SYMBOLIC_GENERIC:
            raise UnsupportedDomainError(operation='to_domain',
                                         domain='SYMBOLIC_GENERIC')
        return SparsePolynomial(self._dimension, self._terms, domain)

    def map_coefficients(self, fn, domain=None) -> 'SparsePolynomial':
        """Apply `fn` to every coefficient, optionally changing the domain."""
        domain = self._domain if domain is None else domain
        return SparsePolynomial(self._dimension,
                                {e: fn(c) for e, c in self._terms.items()},
                                domain)

    def specialize(self, values: Mapping[int, object]) -> 'SparsePolynomial':
        """
        Substitute scalars for some variables. The dimension is kept; the
        substituted variables no longer occur.
        """
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            for i, v in values.items():
                if e[i]:
                    c = c * v ** e[i]
                    e[i] = 0
            e = tuple(e)
            out[e] = out[e] + c if e in out else c
        return SparsePolynomial._raw(
                self._dimension, {e: c for e, c in out.items() if c},
                self._domain)

    def collect(self, indices: Sequence[int]) -> Dict[Exponents,
                                                        'SparsePolynomial']:
        """
        Split into coefficients with respect to the variables `indices`.

        :return: Mapping of exponent tuples over `indices` to polynomials in
            the remaining variables.
        """
        indices = list(indices)
        keep = [i for i in range(self._dimension) if i not in indices]
        if not keep:
            raise DimensionMismatchError(expected='at least one kept variable',
                                         provided=0)
        groups = {}
        for e, c in self._terms.items():
            outer = tuple(e[i] for i in indices)
            inner = tuple(e[i] for i in keep)
            groups.setdefault(outer, {})[inner] = c
        return {k: SparsePolynomial._raw(len(keep), v, self._domain)
                for k, v in groups.items()}

    # evaluation

    def evaluate(self, z: Sequence) -> object:
        """
        Evaluate at the point `z`.

        Exact domains return an exact scalar when `z` holds exact values. The
        complex float path sums real and imaginary parts with
        :func:`math.fsum` in monomial order.
        """
        z = tuple(z)
        if len(z) != self._dimension:
            raise DimensionMismatchError(expected=self._dimension,
                                         provided=len(z))
        inexact = any(isinstance(v, (float, complex)) for v in z)
        if self._domain is ScalarDomain.COMPLEX_FLOAT or (
                inexact and self._domain is not ScalarDomain.SYMBOLIC_GENERIC):
            return self._evaluate_float([complex(v) for v in z])
        total = None
        for e, c in self.items():
            term = c
            for v, a in zip(z, e):
                if a:
                    term = term * v ** a
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def _evaluate_float(self, z) -> complex:
        re, im = [], []
        for e, c in self.items():
            term = complex(c)
            for v, a in zip(z, e):
                if a:
                    term *= v ** a
            re.append(term.real)
            im.append(term.imag)
        return complex(math.fsum(re), math.fsum(im))

    def __call__(self, *z):
        if len(z) == 1 and isinstance(z[0], (tuple, list)):
            z = z[0]
        return self.evaluate(z)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return (self._dimension == other._dimension
                    and self._terms == other._terms)
        if not other:
            return not self._terms
        if self.is_constant():
            return self.coefficient((0,) * self._dimension) == other
        return NotImplemented

    def __hash__(self):
        return hash((self._dimension, frozenset(self._terms.items())))

    def __repr__(self):
        return (f'SparsePolynomial({self._dimension}, {dict(self.items())}, '
                f'{self._domain.name})')

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for e, c in self.items():
            mono = format_monomial(e)
            if mono == '1':
                parts.append(f'({c})')
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f'({c})*{mono}')
        return ' + '.join(parts)

    def term_lines(self) -> Iterable[str]:
        """
        One ``"coeff [a_1, ..., a_N]"`` line per term, highest term first.
        Stable across runs so results can be diffed.
        """
        for e, c in self.items():
            yield f'{c} [{", ".join(str(a) for a in e)}]'

    @classmethod
    def from_term_lines(cls, lines: Iterable[str],
                        domain=ScalarDomain.EXACT_RATIONAL):
        terms = {}
        dimension = None
        for line in lines:
            line = line.strip()
            if not line:
                continue
            coeff, _, vector = line.partition(' ')
            exps = tuple(int(a) for a in vector.strip('[] ').split(','))
            dimension = len(exps)
            terms[exps] = Fraction(coeff)
        if dimension is None:
            raise ValueError('no terms to read')
        return cls(dimension, terms, domain)


def _coeff_div(a, b):
    if isinstance(a, SparsePolynomial):
        return a.exact_div(b)
    if isinstance(a, (Fraction, int)) and isinstance(b, (Fraction, int)):
        return Fraction(a) / b
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        return GaussianRational.coerce(a) / b
    return a / b


def parameter_ring(count: int):
    """
    Generic coefficients for the ``SYMBOLIC_GENERIC`` domain: `count`
    independent variables over ``EXACT_RATIONAL``.
    """
    return [SparsePolynomial.variable(count, i) for i in range(count)]
