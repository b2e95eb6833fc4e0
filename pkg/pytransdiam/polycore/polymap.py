"""
Polynomial self-maps of C^N of a common degree d.
"""
import logging
from fractions import Fraction
from typing import List, Sequence

import numpy as np
import sympy

from pytransdiam.decorators import lazy_property
from pytransdiam.polycore.monomials import exponent_matrix
from pytransdiam.polycore.polynomial import SparsePolynomial
from pytransdiam.polycore.scalars import (GaussianRational, parse_coefficient,
                                          scalar_to_json, widest_domain)
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          MalformedMapError)
from pytransdiam.utils.numpy_utils import as_points, monomial_values

logger = logging.getLogger(__name__)


class PolynomialMap(object):
    """
    ``F = (F_1, ..., F_N)`` with every component of total degree exactly
    `degree`.

    :param components: N :class:`SparsePolynomial` objects in N variables.
    """

    def __init__(self, components: Sequence[SparsePolynomial]):
        components = list(components)
        if not components:
            raise MalformedMapError(reason='no components')
        N = len(components)
        for p in components:
            if p.dimension != N:
                raise DimensionMismatchError(expected=N, provided=p.dimension)
        domains = {p.domain for p in components}
        if len(domains) > 1:
            domain = widest_domain(*domains)
            components = [p.to_domain(domain) for p in components]
        degrees = [p.degree for p in components]
        if min(degrees) < 0:
            raise MalformedMapError(reason='a component is identically zero')
        if len(set(degrees)) != 1:
            raise MalformedMapError(
                    reason=f'component degrees {degrees} are not equal')
        self._components = tuple(components)
        self._degree = degrees[0]
        if self._degree < 1:
            raise MalformedMapError(reason='constant maps are not allowed')

    @classmethod
    def identity(cls, N: int, domain=ScalarDomain.EXACT_RATIONAL):
        return cls([SparsePolynomial.variable(N, i, domain) for i in range(N)])

    @classmethod
    def diagonal(cls, coeffs: Sequence, degree: int,
                 domain=ScalarDomain.EXACT_RATIONAL):
        """``(c_1 z_1^d, ..., c_N z_N^d)``."""
        N = len(coeffs)
        comps = []
        for i, c in enumerate(coeffs):
            exps = [0] * N
            exps[i] = degree
            comps.append(SparsePolynomial(N, {tuple(exps): c}, domain))
        return cls(comps)

    @classmethod
    def linear(cls, matrix, domain=ScalarDomain.EXACT_RATIONAL):
        """The linear map ``z -> A z``."""
        N = len(matrix)
        comps = []
        for row in matrix:
            terms = {}
            for j, a in enumerate(row):
                exps = [0] * N
                exps[j] = 1
                terms[tuple(exps)] = a
            comps.append(SparsePolynomial(N, terms, domain))
        return cls(comps)

    @property
    def N(self) -> int:
        return len(self._components)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def domain(self) -> ScalarDomain:
        return self._components[0].domain

    @property
    def components(self):
        return self._components

    def __getitem__(self, i) -> SparsePolynomial:
        return self._components[i]

    def __iter__(self):
        return iter(self._components)

    def __len__(self):
        return len(self._components)

    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous() for p in self._components)

    def leading_part(self) -> 'PolynomialMap':
        """
        The leading homogeneous part F_h: every component keeps exactly its
        degree-d terms.
        """
        if self.is_homogeneous():
            return self
        return PolynomialMap([p.homogeneous_part(self._degree)
                              for p in self._components])

    def lower_order(self) -> List[SparsePolynomial]:
        return [p - p.homogeneous_part(self._degree)
                for p in self._components]

    def lower_order_norm(self) -> float:
        """
        ``C``: the sum of absolute values of all coefficients of degree below
        d. Gives ``|F(z) - F_h(z)| <= C * max(1, |z|)^(d-1)``.
        """
        return float(sum(abs(complex(c)) for p in self.lower_order()
                         for c in p.terms.values()))

    def to_domain(self, domain) -> 'PolynomialMap':
        return PolynomialMap([p.to_domain(domain) for p in self._components])

    def evaluate(self, z: Sequence) -> tuple:
        return tuple(p.evaluate(z) for p in self._components)

    def __call__(self, z):
        return self.evaluate(z)

    @lazy_property
    def float_evaluator(self) -> 'FloatMapEvaluator':
        return FloatMapEvaluator(self)

    def __eq__(self, other):
        if not isinstance(other, PolynomialMap):
            return NotImplemented
        return self._components == other._components

    def __hash__(self):
        return hash(self._components)

    def __repr__(self):
        return f'PolynomialMap({[str(p) for p in self._components]})'

    __str__ = __repr__


class FloatMapEvaluator(object):
    """
    Vectorized complex evaluation of a :class:`PolynomialMap`.

    Calling the evaluator on a ``(K, N)`` array returns the ``(K, N)`` array
    of images.
    """

    def __init__(self, poly_map: PolynomialMap):
        self.N = poly_map.N
        self.degree = poly_map.degree
        self.exponents = exponent_matrix(self.N, self.degree)
        index = {tuple(e): k for k, e in enumerate(self.exponents)}
        coeffs = np.zeros((self.N, len(self.exponents)), dtype=np.complex128)
        for i, p in enumerate(poly_map):
            if p.domain is ScalarDomain.SYMBOLIC_GENERIC:
                raise MalformedMapError(
                        reason='symbolic maps cannot be evaluated in floats')
            for e, c in p.terms.items():
                coeffs[i, index[e]] = complex(c)
        self.coeffs = coeffs
        lead = np.array([sum(e) == self.degree for e in self.exponents])
        self.leading_coeffs = np.where(lead[None, :], coeffs, 0)
        self.lower_coeffs = np.where(lead[None, :], 0, coeffs)
        # lower-order coefficients split by degree for the rescaled iteration
        self.degree_masks = [np.array([sum(e) == k for e in self.exponents])
                             for k in range(self.degree + 1)]

    def __call__(self, points) -> np.ndarray:
        pts = as_points(points, self.N)
        return monomial_values(pts, self.exponents) @ self.coeffs.T

    def leading(self, points) -> np.ndarray:
        pts = as_points(points, self.N)
        return monomial_values(pts, self.exponents) @ self.leading_coeffs.T

    def graded(self, points) -> List[np.ndarray]:
        """Images of each homogeneous part ``F_k``, k = 0..d."""
        pts = as_points(points, self.N)
        vals = monomial_values(pts, self.exponents)
        return [vals @ np.where(mask[None, :], self.coeffs, 0).T
                for mask in self.degree_masks]


def _exact_coefficient(c, exact):
    """sympy number -> Fraction / GaussianRational / complex."""
    re, im = sympy.re(c), sympy.im(c)
    if re.is_Rational and im.is_Rational:
        re = Fraction(int(re.p), int(re.q))
        im = Fraction(int(im.p), int(im.q))
        if im:
            return GaussianRational(re, im), ScalarDomain.GAUSSIAN_RATIONAL
        return re, ScalarDomain.EXACT_RATIONAL
    if exact:
        re = sympy.nsimplify(re, rational=True)
        im = sympy.nsimplify(im, rational=True)
        return _exact_coefficient(re + sympy.I * im, False)
    return complex(c), ScalarDomain.COMPLEX_FLOAT


def variable_names(N: int) -> List[str]:
    return ['z'] if N == 1 else [f'z{i + 1}' for i in range(N)]


def map_from_expressions(expressions: Sequence[str], exact=False,
                         names=None) -> PolynomialMap:
    """
    Build a map from strings such as ``['z1**2 + z2**2', 'z1*z2']``.

    Variables are ``z`` for N = 1 and ``z1 .. zN`` otherwise. Rational
    coefficients stay exact; decimal ones route to the float domain unless
    `exact` is set.
    """
    N = len(expressions)
    names = names or variable_names(N)
    gens = tuple(sympy.symbols(list(names)))
    components = []
    for text in expressions:
        poly = sympy.Poly(sympy.sympify(text), *gens)
        terms, domains = {}, set()
        for exps, c in poly.terms():
            value, domain = _exact_coefficient(c, exact)
            terms[tuple(int(a) for a in exps)] = value
            domains.add(domain)
        domain = widest_domain(*domains) if domains else \
            ScalarDomain.EXACT_RATIONAL
        components.append(SparsePolynomial(N, terms, domain))
    return PolynomialMap(components)


def map_from_dict(data: dict) -> PolynomialMap:
    """
    Read the JSON map schema::

        {"N": 2, "degree": 2, "exact": false,
         "components": [[{"exponents": [2, 0], "coeff": {"re": "1", "im": "0"}}],
                        ...]}

    An ``"expressions"`` list may be given instead of ``"components"``.
    """
    if not isinstance(data, dict):
        raise MalformedMapError(reason='map descriptor must be an object')
    exact = bool(data.get('exact', False))
    if 'expressions' in data:
        poly_map = map_from_expressions(data['expressions'], exact=exact)
    else:
        try:
            N = int(data['N'])
            raw_components = data['components']
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedMapError(reason=f'missing or invalid field: {e}')
        components = []
        for raw in raw_components:
            terms, domains = {}, set()
            for term in raw:
                coeff = term.get('coeff', {})
                if not isinstance(coeff, dict):
                    coeff = {'re': coeff, 'im': '0'}
                try:
                    value, domain = parse_coefficient(coeff.get('re', '0'),
                                                      coeff.get('im', '0'),
                                                      exact=exact)
                except (ValueError, ZeroDivisionError) as e:
                    raise MalformedMapError(reason=f'bad coefficient: {e}')
                exps = tuple(int(a) for a in term['exponents'])
                if exps in terms:
                    value = terms[exps] + value
                terms[exps] = value
                domains.add(domain)
            domain = widest_domain(*domains) if domains else \
                ScalarDomain.EXACT_RATIONAL
            components.append(SparsePolynomial(N, terms, domain))
        if len(components) != N:
            raise MalformedMapError(
                    reason=f'N = {N} but {len(components)} components')
        poly_map = PolynomialMap(components)
    if 'N' in data and int(data['N']) != poly_map.N:
        raise MalformedMapError(reason=f'N = {data["N"]} does not match')
    if 'degree' in data and int(data['degree']) != poly_map.degree:
        raise MalformedMapError(
                reason=f'degree = {data["degree"]} but components have '
                       f'degree {poly_map.degree}')
    return poly_map


def map_to_dict(poly_map: PolynomialMap) -> dict:
    return {
        'N': poly_map.N,
        'degree': poly_map.degree,
        'exact': poly_map.domain.is_exact,
        'components': [[{'exponents': list(e), 'coeff': scalar_to_json(c)}
                        for e, c in p.items()] for p in poly_map],
    }
