from pytransdiam.polycore.monomials import (Monomial, count_monomials,
                                            exponents_up_to_degree,
                                            monomials_up_to_degree,
                                            vandermonde_degree)
from pytransdiam.polycore.polymap import (FloatMapEvaluator, PolynomialMap,
                                          map_from_dict, map_from_expressions,
                                          map_to_dict)
from pytransdiam.polycore.polynomial import SparsePolynomial
from pytransdiam.polycore.scalars import GaussianRational
from pytransdiam.polycore.sphere import (max_leading_norm_on_sphere,
                                         min_leading_norm_on_sphere)


def evaluate(p: SparsePolynomial, z):
    """Evaluate the polynomial `p` at the point `z`."""
    return p.evaluate(z)


def leading_part(F: PolynomialMap) -> PolynomialMap:
    return F.leading_part()
