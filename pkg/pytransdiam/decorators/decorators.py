from functools import wraps


def _freeze(value):
    """Hashable stand-in for list arguments such as exponent vectors."""
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def memoize(obj):
    """
    Cache the results of a pure function of hashable (or list) arguments.
    The wrapped function gets a ``cache_clear`` attribute.
    """
    cache = obj.cache = {}

    @wraps(obj)
    def memoizer(*args, **kwargs):
        key = (tuple(_freeze(a) for a in args),
               tuple(sorted((k, _freeze(v)) for k, v in kwargs.items())))
        try:
            return cache[key]
        except KeyError:
            value = cache[key] = obj(*args, **kwargs)
            return value

    memoizer.cache_clear = cache.clear
    return memoizer


class lazy_property(object):
    """
    Compute an attribute on first access and store it on the instance.

    Only for values derived from immutable state, e.g. the float evaluator
    of a :class:`PolynomialMap` or the layout of a Macaulay matrix.
    """

    def __init__(self, f):
        self.f = f
        self.attr_name = f.__name__
        self.__doc__ = f.__doc__

    def __get__(self, obj, cls):
        if obj is None:
            return self
        value = self.f(obj)
        obj.__dict__[self.attr_name] = value
        return value
