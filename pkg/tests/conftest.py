import numpy as np
import pytest

from pytransdiam.data._holders import Budget
from pytransdiam.fekete.oracle import IntervalOracle, PolydiscOracle
from pytransdiam.polycore.polymap import PolynomialMap, map_from_expressions


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    """Keep the joblib pools at one worker unless a test asks for more."""
    monkeypatch.delenv('PYTRANSDIAM_THREADS', raising=False)


@pytest.fixture(scope='session')
def rng_seed():
    return 20240


@pytest.fixture
def rng(rng_seed):
    return np.random.default_rng(rng_seed)


@pytest.fixture(scope='session')
def small_budget():
    """Enough search for the low degree checks, fast enough for CI."""
    return Budget(candidate_count=512, rounds=60, restarts=2, batch=32,
                  threads=1)


@pytest.fixture(scope='session')
def full_budget():
    """The default search budget; used by the tests marked slow."""
    return Budget(candidate_count=4096, rounds=2000, restarts=8, threads=4)


@pytest.fixture(scope='session')
def greedy_budget():
    return Budget(candidate_count=512, rounds=0, restarts=0, threads=1)


@pytest.fixture(scope='session')
def unit_disc():
    return PolydiscOracle.unit(1)


@pytest.fixture(scope='session')
def unit_bidisc():
    return PolydiscOracle.unit(2)


@pytest.fixture(scope='session')
def segment():
    return IntervalOracle(-1.0, 1.0)


@pytest.fixture(scope='session')
def square_map():
    """z -> z^2 on C."""
    return map_from_expressions(['z**2'])


@pytest.fixture(scope='session')
def squares_2d():
    """(z1, z2) -> (z1^2, z2^2)."""
    return PolynomialMap.diagonal([1, 1], 2)


@pytest.fixture(scope='session')
def doubled_squares_2d():
    """(z1, z2) -> (2 z1^2, 2 z2^2)."""
    return PolynomialMap.diagonal([2, 2], 2)


@pytest.fixture(scope='session')
def identity_2d():
    return PolynomialMap.identity(2)


@pytest.fixture(scope='session')
def degenerate_quadratic():
    """(z1^2, z1 z2): both vanish on the line z1 = 0."""
    return map_from_expressions(['z1**2', 'z1*z2'])
