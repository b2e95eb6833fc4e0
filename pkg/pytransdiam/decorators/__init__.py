from pytransdiam.decorators.decorators import lazy_property, memoize
