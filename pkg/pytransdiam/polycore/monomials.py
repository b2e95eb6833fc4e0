"""
Monomial combinatorics: counts, Vandermonde degrees and the fixed graded
lexicographic order used everywhere in the package.
"""
import logging
from math import comb
from typing import List, Tuple

import numpy as np

from pytransdiam.decorators import memoize
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          InstanceTooLargeError)

logger = logging.getLogger(__name__)

# counts past this do not fit a signed 64 bit index
MAX_INDEX = 2 ** 63 - 1

Exponents = Tuple[int, ...]


class Monomial(object):
    """An exponent vector ``(a_1, ..., a_N)`` standing for z_1^a_1 ... z_N^a_N."""

    __slots__ = ('_exponents', '_degree')

    def __init__(self, exponents):
        exponents = tuple(int(a) for a in exponents)
        if not exponents:
            raise DimensionMismatchError(expected='N >= 1', provided=0)
        if any(a < 0 for a in exponents):
            raise ValueError(f'Exponents must be nonnegative: {exponents}')
        self._exponents = exponents
        self._degree = sum(exponents)

    @property
    def exponents(self) -> Exponents:
        return self._exponents

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def dimension(self) -> int:
        return len(self._exponents)

    @classmethod
    def one(cls, N: int) -> 'Monomial':
        return cls((0,) * N)

    @classmethod
    def variable(cls, N: int, i: int, power: int = 1) -> 'Monomial':
        exps = [0] * N
        exps[i] = power
        return cls(exps)

    def divides(self, other: 'Monomial') -> bool:
        return all(a <= b for a, b in zip(self._exponents, other._exponents))

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        return Monomial(a + b for a, b in zip(self._exponents,
                                              other._exponents))

    def __truediv__(self, other: 'Monomial') -> 'Monomial':
        if not other.divides(self):
            raise ArithmeticError(f'{other} does not divide {self}')
        return Monomial(a - b for a, b in zip(self._exponents,
                                              other._exponents))

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exponents == other._exponents

    def __hash__(self):
        return hash(self._exponents)

    def __lt__(self, other: 'Monomial'):
        return grlex_key(self._exponents) < grlex_key(other._exponents)

    def __repr__(self):
        return f'Monomial({self._exponents})'

    def __str__(self):
        return format_monomial(self._exponents)


def grlex_key(exponents: Exponents):
    """Sort key putting lower degree first, then descending lex order."""
    return sum(exponents), tuple(-a for a in exponents)


def format_monomial(exponents: Exponents, names=None) -> str:
    if names is None:
        if len(exponents) == 1:
            names = ['z']
        else:
            names = [f'z{i + 1}' for i in range(len(exponents))]
    parts = []
    for name, a in zip(names, exponents):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f'{name}^{a}')
    return '*'.join(parts) if parts else '1'


def _check_size(what: str, value: int) -> int:
    if value > MAX_INDEX:
        raise InstanceTooLargeError(what=what, value=value, limit=MAX_INDEX)
    return value


def count_monomials(N: int, n: int) -> int:
    """
    Number of monomials of degree at most `n` in `N` variables,
    ``M(n) = binomial(N + n, N)``.
    """
    return _check_size('M(n)', comb(N + n, N))


def count_monomials_of_degree(N: int, k: int) -> int:
    return _check_size('binomial(N + k - 1, k)', comb(N + k - 1, k))


def vandermonde_degree(N: int, n: int) -> int:
    """
    Total degree of the Vandermonde determinant,
    ``D(n) = N * binomial(N + n, N + 1)``.
    """
    return _check_size('D(n)', N * comb(N + n, N + 1))


@memoize
def exponents_of_degree(N: int, k: int) -> Tuple[Exponents, ...]:
    """Exponent vectors of total degree exactly `k`, descending lex."""
    if N == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in exponents_of_degree(N - 1, k - first):
            out.append((first,) + rest)
    return tuple(out)


@memoize
def exponents_up_to_degree(N: int, n: int) -> Tuple[Exponents, ...]:
    count_monomials(N, n)
    out = []
    for k in range(n + 1):
        out.extend(exponents_of_degree(N, k))
    return tuple(out)


def monomials_of_degree(N: int, k: int) -> List[Monomial]:
    return [Monomial(e) for e in exponents_of_degree(N, k)]


def monomials_up_to_degree(N: int, n: int) -> List[Monomial]:
    """
    All monomials of degree at most `n` in `N` variables in graded
    lexicographic order, e.g. ``[1, z1, z2, z1^2, z1*z2, z2^2]`` for N = 2,
    n = 2.
    """
    return [Monomial(e) for e in exponents_up_to_degree(N, n)]


@memoize
def exponent_matrix(N: int, n: int) -> np.ndarray:
    """The ``(M(n), N)`` integer array of :func:`exponents_up_to_degree`."""
    arr = np.array(exponents_up_to_degree(N, n), dtype=np.int64)
    arr = arr.reshape(-1, N)
    arr.setflags(write=False)
    return arr
