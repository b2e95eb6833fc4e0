import json

import numpy as np
import pytest

from pytransdiam.data.reader import (load_json, read_map, read_padic_polydisc,
                                     read_set)
from pytransdiam.dynamics.julia import FilledJuliaOracle
from pytransdiam.fekete.oracle import (BallOracle, IntervalOracle,
                                       PointsOracle, PolydiscOracle,
                                       RootPreimageOracle)
from pytransdiam.padic.valuation import UltrametricValue
from pytransdiam.utils.exceptions import (ConfigError, InvalidDescriptorError,
                                          InvalidSetKindError,
                                          MalformedMapError)

SQUARE = {'expressions': ['z**2']}


@pytest.mark.parametrize('descriptor,cls', [
    ({'kind': 'polydisc', 'radii': [1, 2]}, PolydiscOracle),
    ({'kind': 'polydisc', 'N': 3}, PolydiscOracle),
    ({'kind': 'ball', 'N': 2, 'radius': 0.5}, BallOracle),
    ({'kind': 'interval', 'a': 0, 'b': 2}, IntervalOracle),
    ({'kind': 'points', 'points': [[[0, 1], [1, 0]], [[2, 0], [0, 0]]]},
     PointsOracle),
    ({'kind': 'preimage', 'map': SQUARE,
      'set': {'kind': 'polydisc', 'N': 1}}, RootPreimageOracle),
    ({'kind': 'filled_julia', 'map': SQUARE, 'params': {'cap': 20}},
     FilledJuliaOracle),
])
def test_read_set_kinds(descriptor, cls):
    oracle = read_set(descriptor)
    assert isinstance(oracle, cls)
    assert isinstance(read_set(json.dumps(descriptor)), cls)


def test_read_points():
    oracle = read_set({'kind': 'points', 'points': [[[0, 1], [1, 0]],
                                                    [[2, 0], [0, 0]]]})
    assert oracle.N == 2
    assert np.array_equal(oracle.points, [[1j, 1], [2, 0]])
    scalar = read_set({'kind': 'points', 'points': [0.5, {'re': 0, 'im': 1}]})
    assert scalar.N == 1
    assert np.array_equal(scalar.points[:, 0], [0.5, 1j])


def test_filled_julia_params():
    oracle = read_set({'kind': 'filled_julia', 'map': SQUARE,
                       'params': {'cap': 20, 'tol': 1e-8}})
    assert oracle.params.cap == 20
    assert oracle.params.tol == 1e-8


def test_unknown_kind():
    with pytest.raises(InvalidSetKindError):
        read_set({'kind': 'torus'})


@pytest.mark.parametrize('descriptor', [
    {'kind': 'ball', 'radius': 1},
    {'kind': 'points'},
    {'kind': 'polydisc', 'radii': ['wide']},
    '{"kind": "ball", ',
    '[1, 2]',
])
def test_malformed_set(descriptor):
    with pytest.raises(InvalidDescriptorError):
        read_set(descriptor)


def test_read_map():
    F = read_map({'N': 2, 'degree': 2,
                  'components': [[{'exponents': [2, 0], 'coeff': 1}],
                                 [{'exponents': [0, 2],
                                   'coeff': {'re': '1/2', 'im': '0'}}]]})
    assert F.N == 2 and F.degree == 2
    assert F.evaluate((2, 2)) == (4, 2)
    with pytest.raises(MalformedMapError):
        read_map({'N': 2, 'components': [[{'exponents': [1, 0],
                                           'coeff': 1}]]})


def test_read_padic_polydisc():
    D = read_padic_polydisc('{"prime": 3, "radii_log_p": ["1", "-1/2"]}')
    assert D.radii == (UltrametricValue(3, 1), UltrametricValue(3, '-1/2'))


def test_load_json(tmp_path):
    path = tmp_path / 'set.json'
    path.write_text(json.dumps({'kind': 'interval'}))
    assert load_json(str(path)) == {'kind': 'interval'}
    path.write_text('{not json')
    with pytest.raises(ConfigError):
        load_json(str(path))
    with pytest.raises(ConfigError):
        load_json(str(tmp_path / 'missing.json'))
