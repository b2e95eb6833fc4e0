"""
Numerical check of the pullback formula

    d(F^-1 E) = |Res(F_h)|^(-1/(N d^N)) d(E)^(1/d)

at a finite degree cap.
"""
import logging
import math

from pytransdiam.data._holders import Budget, PullbackReport
from pytransdiam.fekete.diameter import diam_sequence
from pytransdiam.fekete.oracle import SetOracle, preimage_oracle
from pytransdiam.polycore.polymap import PolynomialMap
from pytransdiam.resultant.numeric import abs_resultant

logger = logging.getLogger(__name__)


def log_gap(a: float, b: float) -> float:
    """``|log(a / b)|``, infinite if either side vanishes."""
    if a <= 0 or b <= 0:
        return math.inf
    return abs(math.log(a) - math.log(b))


def pullback_rhs(res_abs: float, base_dn: float, N: int, d: int) -> float:
    return res_abs ** (-1.0 / (N * d ** N)) * base_dn ** (1.0 / d)


def pullback_check(F: PolynomialMap, E: SetOracle, n_max: int,
                   budget: Budget = None, seed=0) -> PullbackReport:
    """
    Estimate ``d_{n_max}`` of `E` and of ``F^-1 E`` and compare them through
    the pullback formula. The preimage of `E` under the leading part of `F`
    is estimated too, since the formula only sees ``F_h``.

    Both sequences use the same seed, so for the identity map the two sides
    agree exactly.

    :raises NonRegularMapError: If ``Res(F_h) = 0``.
    """
    res_abs = abs_resultant(F)
    # preimage_oracle rejects non-regular maps; do it before any search
    pre_oracle = preimage_oracle(F, E, seed=seed)
    F_h = F.leading_part()
    leading_oracle = None if F_h is F else preimage_oracle(F_h, E, seed=seed)
    base = diam_sequence(E, n_max, budget, seed)
    pre = diam_sequence(pre_oracle, n_max, budget, seed)
    if leading_oracle is None:
        leading = pre
    else:
        leading = diam_sequence(leading_oracle, n_max, budget, seed)
    rhs = pullback_rhs(res_abs, base.final, F.N, F.degree)
    lhs = pre.final
    report = PullbackReport(lhs, rhs, log_gap(lhs, rhs), res_abs,
                            leading.final, log_gap(lhs, leading.final),
                            base.rows, pre.rows, leading.rows)
    logger.info(f'pullback: lhs {lhs:.8g}, rhs {rhs:.8g}, '
                f'|log(lhs/rhs)| {report.gap:.3g}')
    return report
