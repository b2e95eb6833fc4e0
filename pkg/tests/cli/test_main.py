import json

import pandas as pd
import pytest

from pytransdiam.cli.config import ExperimentConfig, parse_budget
from pytransdiam.cli.main import (EXIT_CONFIG, EXIT_NON_REGULAR, EXIT_OK,
                                  EXIT_TOLERANCE, main)
from pytransdiam.fekete.diameter import DIAM_COLUMNS
from pytransdiam.utils.exceptions import ConfigError

SQUARES = json.dumps({'expressions': ['z1**2', 'z2**2']})
DOUBLED = json.dumps({'expressions': ['2*z1**2', '2*z2**2']})


def run_json(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


class TestResultantCommand(object):

    def test_pure_squares(self, capsys):
        code, report, err = run_json(capsys, ['resultant', '--map', SQUARES])
        assert code == EXIT_OK
        assert 'res = 1' in err
        assert report['command'] == 'resultant'
        assert report['abs_res'] == 1
        assert report['verdict'] == 'PASS'

    def test_with_prime(self, capsys):
        code, report, _ = run_json(capsys, ['resultant', '--map', DOUBLED,
                                            '--prime', '2'])
        assert code == EXIT_OK
        assert report['abs_res'] == 16
        assert report['abs_res_p'] == {'prime': 2, 'exponent': '-4'}

    def test_non_regular(self, capsys):
        degenerate = json.dumps({'expressions': ['z1**2', 'z1*z2']})
        code = main(['resultant', '--map', degenerate])
        _, err = capsys.readouterr()
        assert code == EXIT_NON_REGULAR
        assert 'non-regular' in err


@pytest.mark.parametrize('argv', [
    [],
    ['transform'],
    ['resultant'],
    ['resultant', '--map', '{broken'],
    ['diam', '--set', '{"kind": "torus"}'],
    ['resultant', '--map', SQUARES, '--format', 'xml'],
    ['diam', '--set', '{"kind": "interval"}', '--budget', 'lots'],
    ['diam', '--set', '{"kind": "polydisc", "N": 2}', '--n-max', '2',
     '--budget', '3,0,0'],
    ['padic', '--map', SQUARES, '--prime', '4'],
])
def test_configuration_errors(capsys, argv):
    assert main(argv) == EXIT_CONFIG


class TestSequenceCommands(object):

    def test_diam_csv(self, capsys, tmp_path):
        out = tmp_path / 'diam.csv'
        code = main(['diam', '--set', '{"kind": "interval"}', '--n-max', '2',
                     '--budget', '256,0,0', '--format', 'csv',
                     '--out', str(out)])
        _, err = capsys.readouterr()
        assert code == EXIT_OK
        frame = pd.read_csv(out)
        assert list(frame.columns) == DIAM_COLUMNS
        assert frame['n'].tolist() == [1, 2]
        assert frame['d_n'].iloc[0] == pytest.approx(2.0)
        assert 'seed 0-1-0' in err

    def test_identity_pullback_passes(self, capsys):
        code, report, _ = run_json(capsys, [
            'pullback', '--map', json.dumps({'expressions': ['z1', 'z2']}),
            '--set', '{"kind": "polydisc", "N": 2}', '--n-max', '2',
            '--budget', '256,0,0'])
        assert code == EXIT_OK
        assert report['gap'] == 0.0
        assert len(report['preimage_rows']) == 2

    def test_julia_at_low_degree_fails_tolerance(self, capsys):
        """d_1 of the unit disc is 2, far from its limit 1."""
        code, report, err = run_json(capsys, [
            'julia', '--map', json.dumps({'expressions': ['z**2']}),
            '--n-max', '1', '--budget', '256,0,0'])
        assert code == EXIT_TOLERANCE
        assert report['verdict'] == 'FAIL'
        assert report['rhs'] == pytest.approx(1.0)

    def test_bb(self, capsys):
        code, report, _ = run_json(capsys, [
            'bb', '--map', SQUARES, '--samples', '512', '--depth', '6',
            '--tol', '0.5', '--threads', '1'])
        assert code == EXIT_OK
        assert report['rhs'] == pytest.approx(-0.5)
        assert len(report['seeds']) == 2


class TestPadicCommand(object):

    def test_monomial_map(self, capsys):
        diagonal = json.dumps({'expressions': ['2*z1**2', '3*z2**2']})
        code, report, _ = run_json(capsys, ['padic', '--map', diagonal,
                                            '--prime', '2'])
        assert code == EXIT_OK
        assert report['equal'] is True
        assert report['lhs'] == {'prime': 2, 'exponent': '1/4'}

    def test_unimodular_invariance(self, capsys):
        F = json.dumps({'expressions': ['z1**2 + 3*z2**2', 'z2**2 - z1*z2']})
        code, report, _ = run_json(capsys, ['padic', '--map', F,
                                            '--prime', '3'])
        assert code == EXIT_OK
        assert report['holds'] is True

    def test_needs_a_prime(self, capsys):
        assert main(['padic', '--map', SQUARES]) == EXIT_CONFIG


class TestExperimentConfig(object):

    def test_parse_budget(self):
        assert parse_budget('4096,2000,8') == {'candidate_count': 4096,
                                               'rounds': 2000, 'restarts': 8}
        assert parse_budget(512) == {'candidate_count': 512}
        for bad in ('many', '1,2,3,4'):
            with pytest.raises(ConfigError):
                parse_budget(bad)

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text(json.dumps({
            'command': 'diam', 'set': {'kind': 'interval'}, 'seed': 1,
            'format': 'csv', 'budget': '128,5', 'n_max': 3}))
        config = ExperimentConfig.from_sources('diam', str(path), seed=3,
                                               budget='256', threads=2,
                                               n_max=None)
        assert config.seed == 3
        assert config.n_max == 3
        assert config.fmt == 'csv'
        assert config.budget.candidate_count == 256
        assert config.budget.rounds == 5
        assert config.budget.threads == 2
        assert config.to_dict()['budget']['restarts'] == 8

    def test_defaults(self):
        config = ExperimentConfig('pullback', threads=1)
        assert config.n_max == 8
        assert config.tol == 0.07
        assert config.to_dict()['format'] == 'json'

    @pytest.mark.parametrize('kwargs', [
        {'command': 'nope'},
        {'command': 'diam', 'fmt': 'xml'},
        {'command': 'diam', 'seed': -1},
        {'command': 'diam', 'threads': 0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            ExperimentConfig(**kwargs)

    def test_unknown_field_in_file(self, tmp_path):
        path = tmp_path / 'config.json'
        path.write_text(json.dumps({'colour': 'blue'}))
        with pytest.raises(ConfigError):
            ExperimentConfig.from_sources('diam', str(path))

    def test_require(self):
        with pytest.raises(ConfigError):
            ExperimentConfig('bb', threads=1).require('map')
