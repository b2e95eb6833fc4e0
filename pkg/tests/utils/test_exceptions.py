import inspect
from string import Formatter

import pytest

from pytransdiam.utils import exceptions
from pytransdiam.utils.exceptions import (ConfigError, NonRegularMapError,
                                          NotPrimeError, TransdiamError)

ERROR_CLASSES = [cls for _, cls in inspect.getmembers(exceptions,
                                                      inspect.isclass)
                 if issubclass(cls, TransdiamError) and cls.msg is not None]


def msg_fields(cls):
    return {name for _, name, _, _ in Formatter().parse(cls.msg) if name}


@pytest.mark.parametrize('cls', ERROR_CLASSES, ids=lambda c: c.__name__)
def test_built_from_msg_fields(cls):
    kwargs = {name: f'<{name}>' for name in msg_fields(cls)}
    error = cls(**kwargs)
    assert isinstance(error, TransdiamError)
    assert error.kwargs == kwargs
    for value in kwargs.values():
        assert value in str(error)
    with pytest.raises(cls):
        raise error


def test_every_class_is_covered():
    assert len(ERROR_CLASSES) >= 19


def test_builtin_bases_still_catch():
    with pytest.raises(ValueError):
        raise NotPrimeError(p=4)
    with pytest.raises(ArithmeticError):
        raise NonRegularMapError(reason='common root')


def test_positional_message_wins():
    error = ConfigError('plain text')
    assert str(error) == 'plain text'
    assert ConfigError(reason='bad seed').message() == \
        'Invalid configuration: bad seed'
