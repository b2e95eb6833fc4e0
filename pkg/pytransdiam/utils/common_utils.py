"""
Collection of functions and classes that can be used anywhere.
"""
import collections
import logging
import os
from fractions import Fraction
from typing import Iterable, List

import numpy as np

from pytransdiam import THREADS_ENV

logger = logging.getLogger(__name__)

DEFAULT_THREADS = 1


def tail(n: int, iterable: Iterable):
    """Return an iterator over the last `n` items"""
    return iter(collections.deque(iterable, maxlen=n))


def spread(values: Iterable[float]) -> float:
    """Return ``max - min`` of `values`, 0 for an empty iterable."""
    values = list(values)
    if not values:
        return 0.0
    return max(values) - min(values)


def seed_entropy(*keys) -> List[int]:
    """Flatten ints and int sequences into one entropy list."""
    out = []
    for key in keys:
        if isinstance(key, (list, tuple)):
            out.extend(int(k) for k in key)
        else:
            out.append(int(key))
    return out


def restart_seeds(seed, count: int) -> List[np.random.SeedSequence]:
    """
    Derive one independent :class:`np.random.SeedSequence` per restart.

    The stream for restart ``k`` depends only on ``(seed, k)``, so the
    result of a restart never depends on how many others run beside it.
    """
    base = seed_entropy(seed)
    return [np.random.SeedSequence(base + [k]) for k in range(count)]


def seed_label(seq) -> str:
    """Printable label of a seed sequence or an entropy list."""
    entropy = getattr(seq, 'entropy', seq)
    if isinstance(entropy, (list, tuple)):
        return '-'.join(str(e) for e in entropy)
    return str(entropy)


def default_threads() -> int:
    """Thread count from the environment, or :data:`DEFAULT_THREADS`."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return DEFAULT_THREADS
    try:
        threads = int(raw)
    except ValueError:
        logger.warning(f'Ignoring non-integer {THREADS_ENV}={raw!r}.')
        return DEFAULT_THREADS
    return max(1, threads)


def parse_rational(text) -> Fraction:
    """
    Parse ``'3/4'``, ``'-2'``, ``'0.25'`` or a number into a
    :class:`Fraction`. Decimal strings are converted exactly.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        return Fraction(text)
    return Fraction(str(text).strip())


def is_decimal_literal(text) -> bool:
    """True for decimal strings such as ``'0.5'`` or ``'1e-3'``."""
    if isinstance(text, float):
        return True
    s = str(text).strip().lower()
    return '.' in s or 'e' in s


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))
