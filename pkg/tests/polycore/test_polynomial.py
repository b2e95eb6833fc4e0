from fractions import Fraction

import numpy as np
import pytest

from pytransdiam.polycore.polymap import (PolynomialMap, map_from_dict,
                                          map_from_expressions, map_to_dict)
from pytransdiam.polycore.polynomial import SparsePolynomial
from pytransdiam.polycore.scalars import GaussianRational
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          MalformedMapError)


@pytest.fixture
def x():
    return SparsePolynomial.variable(2, 0)


@pytest.fixture
def y():
    return SparsePolynomial.variable(2, 1)


class TestSparsePolynomial(object):

    def test_zero_terms_dropped(self):
        p = SparsePolynomial(2, {(1, 0): 0, (0, 1): 3})
        assert len(p) == 1
        assert p.coefficient((1, 0)) == 0

    def test_arithmetic(self, x, y):
        p = (x + y) ** 2
        assert p.coefficient((1, 1)) == 2
        assert p - x * x - y * y == 2 * x * y
        assert p.degree == 2
        assert p.is_homogeneous()

    def test_exact_div(self, x, y):
        p = x * x - y * y
        assert p.exact_div(x + y) == x - y
        with pytest.raises(ArithmeticError):
            (x * x + y).exact_div(x + y)

    def test_evaluate_exact(self, x, y):
        p = x * x + Fraction(1, 2) * y
        assert p.evaluate((Fraction(1, 3), 2)) == Fraction(10, 9)

    def test_evaluate_float(self, x, y):
        p = x * y + 1
        assert p.evaluate((1j, 1j)) == pytest.approx(0.0)

    def test_homogeneous_part(self, x, y):
        p = x ** 3 + x * y + 5
        assert p.homogeneous_part(3) == x ** 3
        assert p.homogeneous_part(0) == 5
        assert not p.is_homogeneous()

    def test_derivative(self, x, y):
        assert (x ** 3 * y).derivative(0) == 3 * x ** 2 * y

    def test_domain_mixing(self, x):
        g = SparsePolynomial(2, {(1, 0): GaussianRational(0, 1)},
                             ScalarDomain.GAUSSIAN_RATIONAL)
        s = x + g
        assert s.domain is ScalarDomain.GAUSSIAN_RATIONAL
        assert s.coefficient((1, 0)) == GaussianRational(1, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            SparsePolynomial(2, {(1,): 1})

    def test_term_lines(self, x, y):
        p = 3 * x ** 2 - y
        lines = list(p.term_lines())
        assert lines == ['3 [2, 0]', '-1 [0, 1]']
        assert SparsePolynomial.from_term_lines(lines) == p


class TestPolynomialMap(object):

    def test_unequal_degrees(self, x, y):
        with pytest.raises(MalformedMapError):
            PolynomialMap([x * x, y])

    def test_constant_component(self):
        with pytest.raises(MalformedMapError):
            PolynomialMap([SparsePolynomial.constant(1, 2)])

    def test_leading_part(self):
        F = map_from_expressions(['z1**2 + 3*z2 + 1', 'z2**2 - z1'])
        F_h = F.leading_part()
        assert F_h == PolynomialMap.diagonal([1, 1], 2)
        assert F.lower_order_norm() == pytest.approx(5.0)
        assert F_h.leading_part() is F_h

    def test_expressions_domain(self):
        assert map_from_expressions(['z**2 + 1/3']).domain is \
            ScalarDomain.EXACT_RATIONAL
        assert map_from_expressions(['z**2 + 0.5']).domain is \
            ScalarDomain.COMPLEX_FLOAT
        assert map_from_expressions(['z**2 + I']).domain is \
            ScalarDomain.GAUSSIAN_RATIONAL

    def test_float_evaluator(self):
        F = map_from_expressions(['z1**2 - z2', 'z1*z2 + 2'])
        pts = np.array([[1 + 1j, 2], [0.5, -1j]])
        out = F.float_evaluator(pts)
        for k, z in enumerate(pts):
            expected = F.evaluate(tuple(complex(v) for v in z))
            assert out[k] == pytest.approx(np.array(expected))
        graded = F.float_evaluator.graded(pts)
        assert sum(graded) == pytest.approx(out)

    def test_dict_schema(self):
        data = {'N': 2, 'degree': 2,
                'components': [
                    [{'exponents': [2, 0], 'coeff': {'re': '1', 'im': '0'}}],
                    [{'exponents': [0, 2], 'coeff': {'re': '1/2',
                                                     'im': '0'}},
                     {'exponents': [1, 0], 'coeff': '3'}]]}
        F = map_from_dict(data)
        assert F.domain is ScalarDomain.EXACT_RATIONAL
        assert F[1].coefficient((0, 2)) == Fraction(1, 2)
        assert map_from_dict(map_to_dict(F)) == F

    def test_dict_schema_degree_mismatch(self):
        with pytest.raises(MalformedMapError):
            map_from_dict({'expressions': ['z**2'], 'degree': 3})

    def test_dict_schema_decimal(self):
        F = map_from_dict({'N': 1, 'components': [
            [{'exponents': [2], 'coeff': {'re': '0.5', 'im': '0'}}]]})
        assert F.domain is ScalarDomain.COMPLEX_FLOAT
