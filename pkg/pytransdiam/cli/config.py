"""
Resolved configuration of one experiment: a JSON config file overlaid with
command line flags.
"""
import logging

from pytransdiam.data._holders import Budget
from pytransdiam.data.reader import load_json
from pytransdiam.dynamics.identity import DEFAULT_DEPTH, DEFAULT_SAMPLES
from pytransdiam.utils.common_utils import default_threads
from pytransdiam.utils.exceptions import ConfigError

logger = logging.getLogger(__name__)

COMMANDS = ('resultant', 'diam', 'pullback', 'julia', 'bb', 'padic')

DEFAULT_TOLERANCES = {
    'pullback': 0.07,
    'julia': 0.05,
    'bb': 0.05,
    'padic': 0.0,
}
DEFAULT_N_MAX = {
    'diam': 6,
    'pullback': 8,
    'julia': 6,
}
FORMATS = ('json', 'csv')

BUDGET_FIELDS = ('candidate_count', 'rounds', 'restarts')


def parse_budget(text: str) -> dict:
    """``'4096,2000,8'`` -> candidate_count, rounds, restarts."""
    try:
        values = [int(v) for v in str(text).split(',')]
    except ValueError:
        raise ConfigError(reason=f'budget must be integers, got {text!r}')
    if not 1 <= len(values) <= len(BUDGET_FIELDS):
        raise ConfigError(reason=f'budget takes at most '
                                 f'{len(BUDGET_FIELDS)} values')
    return dict(zip(BUDGET_FIELDS, values))


class ExperimentConfig(object):
    """
    Everything one command needs. Flags override the config file, the file
    overrides the defaults.

    :param command: One of :data:`COMMANDS`.
    :param map: Map descriptor (JSON object).
    :param set: Set descriptor (JSON object).
    :param padic_set: ``{"prime": p, "radii_log_p": [...]}``.
    """

    def __init__(self, command: str, map: dict = None, set: dict = None,
                 padic_set: dict = None, n_max: int = None,
                 budget: dict = None, seed: int = 0, samples: int = None,
                 depth: int = None, prime: int = None, tol: float = None,
                 threads: int = None, out: str = None, fmt: str = 'json',
                 generic: bool = False, max_terms: int = None):
        if command not in COMMANDS:
            raise ConfigError(reason=f'unknown command {command!r}')
        if fmt not in FORMATS:
            raise ConfigError(reason=f'format must be csv or json, got '
                                     f'{fmt!r}')
        self.command = command
        self.map = map
        self.set = set
        self.padic_set = padic_set
        self.n_max = DEFAULT_N_MAX.get(command) if n_max is None else n_max
        self.budget_fields = dict(budget or {})
        self.seed = int(seed)
        self.samples = DEFAULT_SAMPLES if samples is None else int(samples)
        self.depth = DEFAULT_DEPTH if depth is None else int(depth)
        self.prime = prime
        self.tol = DEFAULT_TOLERANCES.get(command) if tol is None else tol
        self.threads = default_threads() if threads is None else int(threads)
        self.out = out
        self.fmt = fmt
        self.generic = bool(generic)
        self.max_terms = max_terms
        self.logger = logging.getLogger(__name__)
        if self.seed < 0:
            raise ConfigError(reason='seed must be non-negative')
        if self.threads < 1:
            raise ConfigError(reason='threads must be positive')

    @property
    def budget(self) -> Budget:
        try:
            fields = {k: v for k, v in self.budget_fields.items()
                      if k != 'threads'}
            return Budget(threads=self.threads, **fields)
        except TypeError as e:
            raise ConfigError(reason=f'bad budget: {e}')

    @classmethod
    def from_sources(cls, command: str, path: str = None,
                     **flags) -> 'ExperimentConfig':
        """
        Merge the JSON file at `path` with `flags`; flags that are ``None``
        do not override.
        """
        data = load_json(path) if path else {}
        if not isinstance(data, dict):
            raise ConfigError(reason='config file must hold an object')
        data = dict(data)
        data.pop('command', None)
        if 'format' in data:
            data['fmt'] = data.pop('format')
        if isinstance(data.get('budget'), str):
            data['budget'] = parse_budget(data['budget'])
        for key, value in flags.items():
            if value is None:
                continue
            if key == 'budget':
                merged = dict(data.get('budget') or {})
                merged.update(parse_budget(value)
                              if isinstance(value, str) else value)
                value = merged
            data[key] = value
        try:
            return cls(command, **data)
        except TypeError as e:
            raise ConfigError(reason=f'unknown config field: {e}')

    def to_dict(self) -> dict:
        """The resolved configuration, embedded in every report."""
        return {
            'command': self.command,
            'map': self.map,
            'set': self.set,
            'padic_set': self.padic_set,
            'n_max': self.n_max,
            'budget': self.budget._asdict(),
            'seed': self.seed,
            'samples': self.samples,
            'depth': self.depth,
            'prime': self.prime,
            'tol': self.tol,
            'threads': self.threads,
            'format': self.fmt,
            'generic': self.generic,
            'max_terms': self.max_terms,
        }

    def require(self, *fields):
        """
        :raises ConfigError: If any of `fields` is unset.
        """
        missing = [f for f in fields if getattr(self, f) is None]
        if missing:
            raise ConfigError(reason=f'{self.command} needs '
                                     f'{", ".join(missing)}')

    def __repr__(self):
        return f'ExperimentConfig({self.to_dict()})'
