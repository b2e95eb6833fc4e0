"""
The nonarchimedean pullback formula on monomial maps and polydiscs, and
the invariance of the unit polydisc under maps with unimodular resultant.
"""
import logging
import random
from fractions import Fraction
from typing import List, Tuple

from pytransdiam.data._holders import InvarianceReport, PadicPullback
from pytransdiam.padic.polydisc import UltrametricPolydisc, polydisc_diam_p
from pytransdiam.padic.valuation import (UltrametricValue, check_prime,
                                         is_p_integral, padic_abs)
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.resultant.padic_abs import padic_abs_resultant
from pytransdiam.utils.enums import ScalarDomain
from pytransdiam.utils.exceptions import (DimensionMismatchError,
                                          PreconditionFailure,
                                          ZeroResultantError)

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 200


def monomial_structure(F: PolynomialMap) -> List[Tuple[int, Fraction]]:
    """
    For ``F_i = c_i z_{s(i)}^d`` with ``s`` a permutation, return the pairs
    ``(s(i), c_i)``.

    :raises PreconditionFailure: If `F` is not of that form.
    """
    if F.domain is not ScalarDomain.EXACT_RATIONAL:
        raise PreconditionFailure(reason='map must have rational '
                                         'coefficients')
    out = []
    for p in F:
        if len(p) != 1:
            raise PreconditionFailure(reason=f'{p} is not a single term')
        (e, c), = p.terms.items()
        powered = [j for j, a in enumerate(e) if a]
        if len(powered) != 1:
            raise PreconditionFailure(reason=f'{p} is not a pure power')
        out.append((powered[0], Fraction(c)))
    if sorted(j for j, _ in out) != list(range(F.N)):
        raise PreconditionFailure(reason='variables are not a permutation')
    return out


def is_monomial_map(F: PolynomialMap) -> bool:
    try:
        monomial_structure(F)
    except PreconditionFailure:
        return False
    return True


def diagonal_preimage(F: PolynomialMap,
                      D: UltrametricPolydisc) -> UltrametricPolydisc:
    """
    ``F^-1 D`` for ``F = (c_1 z_1^d, ..., c_N z_N^d)`` (or a coordinate
    permutation of it): coordinate ``i`` gets radius ``(r_i / |c_i|_p)^(1/d)``
    since the condition is ``|c_i z_i^d|_p <= r_i``.

    :raises ZeroResultantError: For a zero coefficient.
    """
    if F.N != D.N:
        raise DimensionMismatchError(expected=D.N, provided=F.N)
    p = D.prime
    d = F.degree
    radii = [None] * F.N
    for r, (j, c) in zip(D.radii, monomial_structure(F)):
        if not c:
            raise ZeroResultantError(p=p)
        radii[j] = (r / padic_abs(c, p)) ** Fraction(1, d)
    return UltrametricPolydisc(radii)


def pullback_check_p(F: PolynomialMap,
                     D: UltrametricPolydisc) -> PadicPullback:
    """
    Both sides of ``d(F^-1 D)_p = |Res(F_h)|_p^(-1/(N d^N)) d(D)_p^(1/d)``,
    each computed by exact exponent arithmetic; `equal` compares them with
    zero tolerance.
    """
    N, d = F.N, F.degree
    p = D.prime
    lhs = polydisc_diam_p(diagonal_preimage(F, D))
    res_abs = padic_abs_resultant(F.leading_part(), p)
    rhs = res_abs ** Fraction(-1, N * d ** N) * \
        polydisc_diam_p(D) ** Fraction(1, d)
    logger.info(f'p-adic pullback: lhs {lhs}, rhs {rhs}')
    return PadicPullback(lhs, rhs, lhs == rhs)


def _random_integral(rng: random.Random, p: int, spread: int = 50):
    """A rational with ``|x|_p <= 1``."""
    den = rng.randint(1, spread)
    while den % p == 0:
        den = rng.randint(1, spread)
    return Fraction(rng.randint(-spread, spread), den)


def _random_outside(rng: random.Random, p: int, N: int, spread: int = 50):
    """A rational point with at least one coordinate of ``|z_j|_p > 1``."""
    z = [_random_integral(rng, p, spread) for _ in range(N)]
    j = rng.randrange(N)
    k = rng.randint(1, 3)
    num = rng.randint(1, spread)
    while num % p == 0:
        num = rng.randint(1, spread)
    z[j] = Fraction(num, p ** k)
    return tuple(z)


def _check_hypotheses(F: PolynomialMap, p: int):
    if F.domain is not ScalarDomain.EXACT_RATIONAL:
        raise PreconditionFailure(reason='map must have rational '
                                         'coefficients')
    for poly in F:
        for c in poly.terms.values():
            if not is_p_integral(c, p):
                raise PreconditionFailure(
                        reason=f'coefficient {c} is not {p}-integral')
    res_abs = padic_abs_resultant(F.leading_part(), p)
    if res_abs != UltrametricValue.one(p):
        raise PreconditionFailure(reason=f'|Res(F_h)|_{p} = {res_abs} != 1')


def unimodular_invariance_report(F: PolynomialMap, p: int,
                                 trials: int = DEFAULT_TRIALS,
                                 seed=0) -> InvarianceReport:
    """
    Check ``F^-1 D_p(0, 1) = D_p(0, 1)`` for an integral `F` with
    ``|Res(F_h)|_p = 1``.

    Monomial maps are certified exactly through :func:`diagonal_preimage`.
    For other maps the inclusion ``F(D) ⊆ D`` is checked on `trials`
    rational points of the unit polydisc, and the converse on `trials`
    points outside it; the converse is only certified by the formula and
    the sampled part is reported separately.

    :raises PreconditionFailure: If the hypotheses fail.
    """
    p = check_prime(p)
    _check_hypotheses(F, p)
    unit = UltrametricPolydisc.unit(F.N, p)
    if is_monomial_map(F):
        certified = diagonal_preimage(F, unit) == unit
        return InvarianceReport(certified, True, None, None, 0)
    rng = random.Random(seed)
    inclusion = True
    for _ in range(trials):
        z = tuple(_random_integral(rng, p) for _ in range(F.N))
        if F.evaluate(z) not in unit:
            logger.warning(f'inclusion fails at {z}')
            inclusion = False
            break
    converse = True
    for _ in range(trials):
        z = _random_outside(rng, p, F.N)
        if F.evaluate(z) in unit:
            logger.warning(f'converse fails at {z}')
            converse = False
            break
    return InvarianceReport(inclusion and converse, False, inclusion,
                            converse, trials)


def unimodular_invariance_check(F: PolynomialMap, p: int,
                                trials: int = DEFAULT_TRIALS,
                                seed=0) -> bool:
    return unimodular_invariance_report(F, p, trials, seed).holds
