"""
n-th diameters and diameter sequences of oracle sets.
"""
import logging
from typing import Iterable, List

import numpy as np
import pandas as pd

from pytransdiam.data._holders import Budget, DiamRow, DiamSummary
from pytransdiam.fekete.configuration import FeketeConfiguration
from pytransdiam.fekete.exchange import exchange_optimize
from pytransdiam.fekete.leja import greedy_leja
from pytransdiam.fekete.oracle import SetOracle
from pytransdiam.polycore.monomials import (count_monomials,
                                            vandermonde_degree)
from pytransdiam.utils.common_utils import spread, tail
from pytransdiam.utils.exceptions import DegenerateOracleError

logger = logging.getLogger(__name__)

# greedy initialization only
GREEDY_ONLY = Budget(rounds=0, restarts=0)

DIAM_COLUMNS = ['n', 'M', 'D', 'log_abs_det', 'd_n']


def dn_estimate(oracle: SetOracle, n: int, budget: Budget = None, seed=0,
                start: FeketeConfiguration = None) -> FeketeConfiguration:
    """
    A lower bound for ``d_n`` of the oracle's set: a greedy Leja start
    improved by exchange search under `budget`.

    :param start: Use this configuration instead of the greedy one; it must
        consist of members of the set.
    :raises DegenerateOracleError: Propagated from :func:`greedy_leja`.
    """
    budget = Budget() if budget is None else budget
    if start is None:
        config = greedy_leja(oracle, n, budget.candidate_count, seed)
    else:
        if not np.all(oracle.contains(start.points)):
            raise DegenerateOracleError(count=start.M, oracle=repr(oracle),
                                        retries=0)
        config = start
    config = exchange_optimize(config, oracle, budget.rounds, budget.restarts,
                               seed, budget.batch, budget.perturb_scale,
                               budget.threads)
    logger.info(f'd_{n} >= {config.d_n:.8g} for {oracle!r}')
    return config


def diam_row(config: FeketeConfiguration) -> DiamRow:
    return DiamRow(config.n, count_monomials(config.N, config.n),
                   vandermonde_degree(config.N, config.n),
                   config.log_abs_det, config.d_n)


def summarize(rows: List[DiamRow]) -> DiamSummary:
    """The last ``d_n`` as the limit proxy and the spread of the last three."""
    final = rows[-1].d_n if rows else float('nan')
    return DiamSummary(list(rows), final,
                       spread(r.d_n for r in tail(3, rows)))


def diam_sequence(oracle: SetOracle, n_max: int, budget: Budget = None,
                  seed=0, configs: list = None) -> DiamSummary:
    """
    :func:`dn_estimate` for ``n = 1..n_max``.

    :param configs: When a list, the configurations are appended to it.
    :raises ValueError: If ``n_max < 1``.
    """
    if n_max < 1:
        raise ValueError(f'n_max must be at least 1, got {n_max}')
    rows = []
    for n in range(1, n_max + 1):
        config = dn_estimate(oracle, n, budget, seed)
        if configs is not None:
            configs.append(config)
        rows.append(diam_row(config))
    summary = summarize(rows)
    logger.info(f'd_{n_max} = {summary.final:.8g}, '
                f'last three spread {summary.spread:.3g}')
    return summary


def diameter_frame(rows: Iterable[DiamRow]) -> pd.DataFrame:
    """The rows of a sequence as a frame with columns n, M, D, log_abs_det,
    d_n."""
    if isinstance(rows, DiamSummary):
        rows = rows.rows
    return pd.DataFrame([r._asdict() for r in rows], columns=DIAM_COLUMNS)


def fattening_report(oracle: SetOracle, n: int, eps_values: Iterable[float],
                     budget: Budget = None, seed=0) -> pd.DataFrame:
    """
    ``d_n`` of the closed eps-neighborhoods of the set, each started from
    the set's own configuration so the values are nondecreasing in eps up
    to search noise. Only oracles with a closed form neighborhood are
    supported.
    """
    base = dn_estimate(oracle, n, budget, seed)
    records = [{'eps': 0.0, 'log_abs_det': base.log_abs_det,
                'd_n': base.d_n}]
    for eps in eps_values:
        fat = oracle.fattened(eps)
        config = dn_estimate(fat, n, budget, seed, start=base)
        records.append({'eps': float(eps), 'log_abs_det': config.log_abs_det,
                        'd_n': config.d_n})
    frame = pd.DataFrame.from_records(records)
    frame['relative_change'] = frame['d_n'] / base.d_n - 1
    return frame

