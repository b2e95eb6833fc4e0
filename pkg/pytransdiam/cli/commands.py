"""
One function per subcommand. Each takes an :class:`ExperimentConfig` and
returns a :class:`Report`; errors propagate to the entry point, which maps
them to exit codes.
"""
import logging
from typing import Callable, Dict, List

import pandas as pd

from pytransdiam.cli.config import ExperimentConfig
from pytransdiam.data._holders import DiamSummary
from pytransdiam.data.reader import read_map, read_padic_polydisc, read_set
from pytransdiam.dynamics.identity import CHUNK_SIZE, bb_check, chunk_sizes
from pytransdiam.dynamics.julia import (filled_julia_oracle,
                                        julia_diam_prediction)
from pytransdiam.fekete.diameter import diam_sequence, diameter_frame
from pytransdiam.fekete.exchange import derived_seed_labels
from pytransdiam.fekete.pullback import log_gap, pullback_check
from pytransdiam.padic.polydisc import UltrametricPolydisc
from pytransdiam.padic.pullback import (is_monomial_map, pullback_check_p,
                                        unimodular_invariance_report)
from pytransdiam.padic.valuation import check_prime
from pytransdiam.polycore.scalars import scalar_to_json
from pytransdiam.resultant.generic import (expansion_stats, pure_square_point,
                                           resultant_generic_quadratic_ternary)
from pytransdiam.resultant.macaulay import resultant_exact
from pytransdiam.resultant.numeric import resultant_numeric
from pytransdiam.resultant.padic_abs import padic_abs_resultant
from pytransdiam.utils.common_utils import (restart_seeds, seed_entropy,
                                            seed_label)
from pytransdiam.utils.enums import ScalarDomain, Verdict
from pytransdiam.utils.exceptions import NonRegularMapError

logger = logging.getLogger(__name__)


class Report(object):
    """
    The outcome of one command.

    :param fields: JSON-ready results.
    :param verdict: :class:`Verdict` or ``None`` for commands without a
        tolerance.
    :param lines: Human readable summary lines.
    :param table: Optional frame written for ``--format csv``.
    :param seeds: Labels of every derived random stream.
    """

    def __init__(self, config: ExperimentConfig, fields: dict,
                 verdict: Verdict = None, lines: List[str] = None,
                 table: pd.DataFrame = None, seeds: List[str] = None):
        self.config = config
        self.fields = fields
        self.verdict = verdict
        self.lines = lines or []
        self.table = table
        self.seeds = seeds or []

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_dict(self) -> dict:
        out = {'command': self.config.command,
               'config': self.config.to_dict()}
        out.update(self.fields)
        out['verdict'] = None if self.verdict is None else self.verdict.name
        out['seeds'] = self.seeds
        return out

    def to_frame(self) -> pd.DataFrame:
        if self.table is not None:
            return self.table
        scalars = {k: v for k, v in self.fields.items()
                   if not isinstance(v, (list, dict))}
        scalars['verdict'] = None if self.verdict is None else \
            self.verdict.name
        return pd.DataFrame([scalars])


def _rows_to_json(rows) -> List[dict]:
    return [r._asdict() for r in rows]


def _sequence_seeds(config: ExperimentConfig) -> List[str]:
    budget = config.budget
    seeds = []
    for n in range(1, config.n_max + 1):
        seeds += derived_seed_labels(config.seed, n, budget.restarts)
    return seeds


def _summary_fields(summary: DiamSummary) -> dict:
    return {'rows': _rows_to_json(summary.rows), 'final': summary.final,
            'spread': summary.spread}


def cmd_resultant(config: ExperimentConfig) -> Report:
    """
    ``Res(F_h)`` exactly when the map is exact, in floats otherwise, and
    ``|Res|_p`` when a prime is configured. With ``generic`` set, expands
    the resultant of three generic ternary quadratics instead.

    :raises NonRegularMapError: If the resultant vanishes.
    """
    if config.generic:
        return _generic_resultant(config)
    config.require('map')
    F_h = read_map(config.map).leading_part()
    fields = {}
    if F_h.domain.is_exact:
        res = resultant_exact(F_h)
        fields['res'] = scalar_to_json(res)
        text = str(res)
        abs_res = abs(complex(res))
    else:
        numeric = resultant_numeric(F_h)
        res = numeric.value
        fields.update(res={'re': res.real, 'im': res.imag},
                      condition=numeric.condition,
                      ill_conditioned=numeric.ill_conditioned)
        text = f'{res:.12g}'
        abs_res = abs(res)
    fields['abs_res'] = abs_res
    lines = [f'res = {text}', f'|res| = {abs_res:.12g}']
    if abs_res == 0:
        raise NonRegularMapError(reason='Res(F_h) = 0, the map is '
                                        'non-regular')
    if config.prime is not None and \
            F_h.domain is ScalarDomain.EXACT_RATIONAL:
        res_p = padic_abs_resultant(F_h, check_prime(config.prime))
        fields['abs_res_p'] = res_p.to_json()
        lines.append(f'|res|_{config.prime} = {res_p}')
    return Report(config, fields, Verdict.PASS, lines)


def _generic_resultant(config: ExperimentConfig) -> Report:
    kwargs = {} if config.max_terms is None else \
        {'max_terms': config.max_terms}
    res = resultant_generic_quadratic_ternary(**kwargs)
    stats = expansion_stats(res)
    at_squares = res.evaluate(pure_square_point())
    fields = {'terms': stats.terms, 'degree': stats.degree,
              'pure_squares': str(at_squares)}
    lines = [f'terms = {stats.terms}', f'degree = {stats.degree}',
             f'res(x^2, y^2, z^2) = {at_squares}']
    return Report(config, fields, Verdict.PASS, lines)


def cmd_diam(config: ExperimentConfig) -> Report:
    """The diameter table of the configured set."""
    config.require('set', 'n_max')
    oracle = read_set(config.set)
    summary = diam_sequence(oracle, config.n_max, config.budget, config.seed)
    frame = diameter_frame(summary)
    lines = [frame.to_string(index=False),
             f'd_{config.n_max} = {summary.final:.10g}, '
             f'last three spread {summary.spread:.3g}']
    return Report(config, _summary_fields(summary), None, lines, frame,
                  _sequence_seeds(config))


def cmd_pullback(config: ExperimentConfig) -> Report:
    config.require('map', 'set', 'n_max')
    F = read_map(config.map)
    E = read_set(config.set)
    report = pullback_check(F, E, config.n_max, config.budget, config.seed)
    verdict = Verdict.from_gap(report.gap, config.tol)
    fields = {'lhs': report.lhs, 'rhs': report.rhs, 'gap': report.gap,
              'res_abs': report.res_abs, 'lhs_leading': report.lhs_leading,
              'leading_gap': report.leading_gap,
              'base_rows': _rows_to_json(report.base_rows),
              'preimage_rows': _rows_to_json(report.preimage_rows),
              'leading_rows': _rows_to_json(report.leading_rows)}
    lines = [f'lhs = {report.lhs:.10g}', f'rhs = {report.rhs:.10g}',
             f'|log(lhs/rhs)| = {report.gap:.4g} (tol {config.tol})',
             f'leading part gap = {report.leading_gap:.4g}']
    return Report(config, fields, verdict, lines,
                  seeds=_sequence_seeds(config))


def cmd_julia(config: ExperimentConfig) -> Report:
    """Measured ``d_n`` of the filled Julia set against the prediction."""
    config.require('map', 'n_max')
    F = read_map(config.map)
    prediction = julia_diam_prediction(F)
    oracle = filled_julia_oracle(F)
    summary = diam_sequence(oracle, config.n_max, config.budget, config.seed)
    gap = log_gap(summary.final, prediction)
    fields = {'lhs': summary.final, 'rhs': prediction, 'gap': gap,
              'escape_radius': oracle.params.radius}
    fields.update(_summary_fields(summary))
    lines = [f'measured d_{config.n_max} = {summary.final:.10g}',
             f'predicted = {prediction:.10g}',
             f'|log(lhs/rhs)| = {gap:.4g} (tol {config.tol})']
    return Report(config, fields, Verdict.from_gap(gap, config.tol), lines,
                  seeds=_sequence_seeds(config))


def cmd_bb(config: ExperimentConfig) -> Report:
    config.require('map')
    F = read_map(config.map)
    report = bb_check(F, config.samples, config.depth, config.seed,
                      config.threads)
    chunks = len(chunk_sizes(config.samples, CHUNK_SIZE))
    seeds = [seed_label(s) for key in (0, 1)
             for s in restart_seeds(seed_entropy(config.seed, key), chunks)]
    lines = [f'lhs = {report.lhs:.8g}', f'rhs = {report.rhs:.8g}',
             f'gap = {report.gap:.4g} (tol {config.tol})']
    return Report(config, dict(report._asdict()),
                  Verdict.from_gap(report.gap, config.tol), lines,
                  seeds=seeds)


def cmd_padic(config: ExperimentConfig) -> Report:
    """
    The exact pullback identity for monomial maps; for other maps, the
    invariance of the unit polydisc under unimodular resultant.

    :raises PreconditionFailure: If the hypotheses of the check fail.
    """
    config.require('map')
    F = read_map(config.map)
    if config.padic_set is not None:
        D = read_padic_polydisc(config.padic_set)
    else:
        config.require('prime')
        D = UltrametricPolydisc.unit(F.N, check_prime(config.prime))
    if is_monomial_map(F):
        result = pullback_check_p(F, D)
        gap = 0.0 if result.equal else \
            float(abs(result.lhs.log_p - result.rhs.log_p))
        fields = {'lhs': result.lhs.to_json(), 'rhs': result.rhs.to_json(),
                  'gap': gap, 'equal': result.equal,
                  'set': D.to_descriptor()}
        lines = [f'lhs = {result.lhs}', f'rhs = {result.rhs}',
                 f'equal = {result.equal}']
        return Report(config, fields, Verdict.from_gap(gap, config.tol),
                      lines)
    invariance = unimodular_invariance_report(F, D.prime, seed=config.seed)
    fields = dict(invariance._asdict())
    lines = [f'F^-1 D_{D.prime}(0, 1) = D_{D.prime}(0, 1): '
             f'{invariance.holds}',
             'converse direction certified by formula, sampled '
             f'{invariance.sampled_converse}']
    verdict = Verdict.PASS if invariance.holds else Verdict.FAIL
    return Report(config, fields, verdict, lines)


COMMAND_TABLE: Dict[str, Callable[[ExperimentConfig], Report]] = {
    'resultant': cmd_resultant,
    'diam': cmd_diam,
    'pullback': cmd_pullback,
    'julia': cmd_julia,
    'bb': cmd_bb,
    'padic': cmd_padic,
}


def run(config: ExperimentConfig) -> Report:
    report = COMMAND_TABLE[config.command](config)
    logger.info(f'{config.command}: verdict {report.verdict}')
    return report
