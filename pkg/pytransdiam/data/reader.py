"""
Read JSON descriptors of maps and sets and turn them into library objects.
"""
import json
import logging
from typing import Union

import numpy as np

from pytransdiam.data._holders import DEFAULT_ESCAPE_CAP, DEFAULT_ESCAPE_TOL
from pytransdiam.dynamics.escape import escape_parameters
from pytransdiam.dynamics.julia import filled_julia_oracle
from pytransdiam.fekete.oracle import (BallOracle, IntervalOracle,
                                       PointsOracle, PolydiscOracle,
                                       SetOracle, preimage_oracle)
from pytransdiam.padic.polydisc import UltrametricPolydisc
from pytransdiam.polycore.polymap import PolynomialMap, map_from_dict
from pytransdiam.utils.enums import SetKind
from pytransdiam.utils.exceptions import (ConfigError, InvalidDescriptorError,
                                          InvalidSetKindError, TransdiamError)

logger = logging.getLogger(__name__)

descriptor_input = Union[str, dict]


def load_json(path: str) -> dict:
    """
    Load a JSON file.

    :raises ConfigError: If the file is missing or not valid JSON.
    """
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as e:
        raise ConfigError(reason=f'cannot read {path}: {e}')
    except json.JSONDecodeError as e:
        raise ConfigError(reason=f'{path} is not valid JSON: {e}')


def _as_dict(data: descriptor_input, what: str) -> dict:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise InvalidDescriptorError(what=what, reason=str(e))
    if not isinstance(data, dict):
        raise InvalidDescriptorError(what=what,
                                     reason='descriptor must be an object')
    return data


def read_map(data: descriptor_input) -> PolynomialMap:
    """A map from its JSON descriptor, see :func:`map_from_dict`."""
    return map_from_dict(_as_dict(data, 'map'))


def _complex(value) -> complex:
    """``[re, im]``, ``{"re", "im"}`` or a plain number."""
    if isinstance(value, dict):
        return complex(float(value.get('re', 0)), float(value.get('im', 0)))
    if isinstance(value, (list, tuple)):
        re, im = value
        return complex(float(re), float(im))
    return complex(float(value))


def _polydisc(data: dict) -> PolydiscOracle:
    if 'radii' in data:
        return PolydiscOracle([float(r) for r in data['radii']])
    return PolydiscOracle(np.full(int(data['N']),
                                  float(data.get('radius', 1.0))))


def _points(data: dict) -> PointsOracle:
    rows = data['points']
    return PointsOracle([[_complex(z) for z in row]
                         if isinstance(row, list) and row
                         and isinstance(row[0], (list, dict))
                         else [_complex(row)]
                         for row in rows])


def _filled_julia(data: dict) -> SetOracle:
    F = read_map(data['map'])
    params = data.get('params', {})
    return filled_julia_oracle(
            F, escape_parameters(F, cap=int(params.get('cap',
                                                      DEFAULT_ESCAPE_CAP)),
                                 tol=float(params.get('tol',
                                                      DEFAULT_ESCAPE_TOL))))


def read_set(data: descriptor_input) -> SetOracle:
    """
    An oracle from its JSON descriptor::

        {"kind": "polydisc", "radii": [1, 1]}   or {"kind": "polydisc", "N": 2}
        {"kind": "ball", "N": 2, "radius": 1}
        {"kind": "interval", "a": -1, "b": 1}
        {"kind": "points", "points": [[[re, im], ...], ...]}
        {"kind": "preimage", "map": {...}, "set": {...}}
        {"kind": "filled_julia", "map": {...}, "params": {"cap": 64}}

    :raises InvalidSetKindError: For an unknown kind.
    :raises InvalidDescriptorError: For missing or malformed fields.
    """
    data = _as_dict(data, 'set')
    kind = SetKind.check_if_valid(data.get('kind'))
    try:
        if kind is SetKind.POLYDISC:
            return _polydisc(data)
        if kind is SetKind.BALL:
            return BallOracle(int(data['N']), float(data.get('radius', 1.0)))
        if kind is SetKind.INTERVAL:
            return IntervalOracle(float(data.get('a', -1.0)),
                                  float(data.get('b', 1.0)))
        if kind is SetKind.POINTS:
            return _points(data)
        if kind is SetKind.PREIMAGE:
            return preimage_oracle(read_map(data['map']),
                                   read_set(data['set']))
        if kind is SetKind.FILLED_JULIA:
            return _filled_julia(data)
    except TransdiamError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidDescriptorError(what=kind.name.lower(),
                                     reason=f'missing or invalid field: {e}')
    raise InvalidSetKindError(kind=kind)


def read_padic_polydisc(data: descriptor_input) -> UltrametricPolydisc:
    """``{"prime": p, "radii_log_p": ["1/2", "0"]}``."""
    return UltrametricPolydisc.from_descriptor(_as_dict(data, 'p-adic set'))
