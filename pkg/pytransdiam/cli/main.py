"""
Entry point of the ``pytransdiam`` command.
"""
import argparse
import json
import logging
import sys
from typing import List

from pytransdiam.cli.commands import Report, run
from pytransdiam.cli.config import COMMANDS, FORMATS, ExperimentConfig
from pytransdiam.utils.exceptions import (DegenerateOracleError,
                                          NonRegularMapError,
                                          RegularityAdvisoryError,
                                          ToleranceFailure, TransdiamError,
                                          ZeroResultantError)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NON_REGULAR = 2
EXIT_DEGENERATE = 3
EXIT_TOLERANCE = 4


def exit_code(error: Exception) -> int:
    """Exit code of an error raised by a command."""
    if isinstance(error, (NonRegularMapError, RegularityAdvisoryError,
                          ZeroResultantError)):
        return EXIT_NON_REGULAR
    if isinstance(error, DegenerateOracleError):
        return EXIT_DEGENERATE
    return EXIT_CONFIG


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
            prog='pytransdiam',
            description='Transfinite diameters, resultants and pullback '
                        'formulas for polynomial maps.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument('--config', help='JSON config file')
        p.add_argument('--map', type=json.loads,
                       help='map descriptor as inline JSON')
        p.add_argument('--set', type=json.loads,
                       help='set descriptor as inline JSON')
        p.add_argument('--out', help='write the report here')
        p.add_argument('--format', dest='fmt', choices=FORMATS)
        p.add_argument('--seed', type=int)
        p.add_argument('--n-max', dest='n_max', type=int)
        p.add_argument('--tol', type=float)
        p.add_argument('--threads', type=int)
        p.add_argument('--prime', type=int)
        p.add_argument('--samples', type=int)
        p.add_argument('--depth', type=int)
        p.add_argument('--budget',
                       help='candidate_count[,rounds[,restarts]]')
        if name == 'resultant':
            p.add_argument('--generic', action='store_true', default=None,
                           help='expand the generic ternary quadratic '
                                'resultant')
            p.add_argument('--max-terms', dest='max_terms', type=int)
    return parser


def write_report(report: Report, out: str = None, fmt: str = 'json'):
    if fmt == 'csv':
        text = report.to_frame().to_csv(index=False)
    else:
        text = json.dumps(report.to_dict(), indent=2, default=str)
    if out:
        with open(out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')


def main(argv: List[str] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    flags = {k: v for k, v in vars(args).items()
             if k not in ('command', 'config')}
    try:
        config = ExperimentConfig.from_sources(args.command, args.config,
                                               **flags)
        report = run(config)
    except TransdiamError as e:
        print(f'error: {e}', file=sys.stderr)
        if isinstance(e, NonRegularMapError):
            print('non-regular', file=sys.stderr)
        return exit_code(e)
    for line in report.lines:
        print(line, file=sys.stderr)
    for label in report.seeds:
        print(f'seed {label}', file=sys.stderr)
    write_report(report, config.out, config.fmt)
    if not report.passed:
        print(ToleranceFailure(command=config.command,
                               gap=report.fields.get('gap'), tol=config.tol),
              file=sys.stderr)
        return EXIT_TOLERANCE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
