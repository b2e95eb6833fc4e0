"""
Single-point exchange (maxvol) improvement of Fekete configurations.

For the scaled Vandermonde matrix ``V`` of the current points and a batch
of candidate rows ``C``, ``B = C V^-1`` holds in entry ``(k, i)`` the factor
by which ``|det V|`` changes when point ``i`` is replaced by candidate
``k``. The inverse is kept current with rank one updates.
"""
import logging
import math
from typing import List, Tuple

import numpy as np
from joblib import Parallel, delayed

from pytransdiam.data._holders import (DEFAULT_BATCH, DEFAULT_PERTURB_SCALE,
                                       DEFAULT_RESTARTS, DEFAULT_ROUNDS)
from pytransdiam.fekete.configuration import FeketeConfiguration
from pytransdiam.fekete.oracle import SetOracle
from pytransdiam.fekete.vandermonde import (scaled_vandermonde,
                                            vandermonde_logabsdet)
from pytransdiam.utils.common_utils import (default_threads, restart_seeds,
                                            seed_entropy, seed_label)

logger = logging.getLogger(__name__)

# an exchange must grow |det| by more than this factor
ACCEPT_FACTOR = 1 + 1e-12
# perturbation scale in round r is perturb_scale * SCALE_DECAY**r
SCALE_DECAY = 0.998
MIN_SCALE_FRACTION = 0.02
# accepted exchanges between refactorizations of V
REFACTOR_EVERY = 50


def perturbation_scale(perturb_scale: float, r: int) -> float:
    """Scale of the local proposals in round `r`."""
    return perturb_scale * max(SCALE_DECAY ** r, MIN_SCALE_FRACTION)


class ExchangeRun(object):
    """
    One restart of the exchange search, driven by its own random stream.

    :param config: The starting configuration.
    :param oracle: Membership oracle of the set.
    :param seed_seq: :class:`np.random.SeedSequence` owned by this run.
    """

    def __init__(self, config: FeketeConfiguration, oracle: SetOracle,
                 seed_seq: np.random.SeedSequence,
                 batch: int = DEFAULT_BATCH,
                 perturb_scale: float = DEFAULT_PERTURB_SCALE):
        self.n = config.n
        self.oracle = oracle
        self.seed_seq = seed_seq
        self.rng = np.random.default_rng(seed_seq)
        self.batch = batch
        self.perturb_scale = perturb_scale
        self.radii = oracle.coordinate_radii
        self.points = np.array(config.points)
        self.log_abs_det = config.log_abs_det
        self.accepted = 0
        self.logger = logging.getLogger(__name__)
        self._refactor()

    def _refactor(self):
        V = scaled_vandermonde(self.points, self.n, self.radii)
        self.V_inv = np.linalg.inv(V)

    def _candidates(self, r: int) -> np.ndarray:
        fresh = self.batch // 2
        local = self.batch - fresh
        anchors = self.points[self.rng.integers(len(self.points), size=local)]
        near = self.oracle.perturb(anchors,
                                   perturbation_scale(self.perturb_scale, r),
                                   self.rng)
        return np.concatenate([self.oracle.sample(fresh, self.rng), near])

    def step(self, r: int) -> bool:
        """One round: the best single exchange among a candidate batch."""
        cands = self._candidates(r)
        B = scaled_vandermonde(cands, self.n, self.radii) @ self.V_inv
        k, i = np.unravel_index(np.argmax(np.abs(B)), B.shape)
        growth = abs(B[k, i])
        if not growth > ACCEPT_FACTOR:
            return False
        e_i = np.zeros(B.shape[1])
        e_i[i] = 1.0
        self.V_inv = self.V_inv - np.outer(self.V_inv[:, i],
                                           B[k, :] - e_i) / B[k, i]
        self.points[i] = cands[k]
        self.log_abs_det += math.log(growth)
        self.accepted += 1
        if self.accepted % REFACTOR_EVERY == 0:
            self._refactor()
        return True

    def run(self, rounds: int) -> Tuple[float, np.ndarray]:
        for r in range(rounds):
            self.step(r)
        self.logger.debug(f'restart {seed_label(self.seed_seq)}: '
                          f'{self.accepted} exchanges, '
                          f'log|det| {self.log_abs_det:.10g}')
        return self.log_abs_det, self.points


def _run_restart(config, oracle, seed_seq, rounds, batch, perturb_scale):
    return ExchangeRun(config, oracle, seed_seq, batch, perturb_scale).run(
            rounds)


def exchange_optimize(config: FeketeConfiguration, oracle: SetOracle,
                      rounds: int = DEFAULT_ROUNDS,
                      restarts: int = DEFAULT_RESTARTS, seed=0,
                      batch: int = DEFAULT_BATCH,
                      perturb_scale: float = DEFAULT_PERTURB_SCALE,
                      threads: int = None) -> FeketeConfiguration:
    """
    Improve `config` by repeated single-point exchanges.

    Each restart starts from `config` and owns the stream
    ``SeedSequence([seed, n, 1, k])``. Restarts run on a thread pool; the
    best result wins, ties going to the lowest restart index. A proposal is
    accepted only if it strictly increases ``|det|``, so the output never
    has a smaller ``log_abs_det`` than the input, and more rounds or more
    restarts never give a smaller one either.

    :param threads: Worker threads, :func:`default_threads` if ``None``.
    :return: `config` itself when nothing better was found.
    """
    if rounds <= 0 or restarts <= 0 or not config.is_finite:
        return config
    threads = default_threads() if threads is None else threads
    seeds = restart_seeds(seed_entropy(seed, config.n, 1), restarts)
    results: List[Tuple[float, np.ndarray]] = Parallel(
            n_jobs=threads, backend='threading')(
            delayed(_run_restart)(config, oracle, s, rounds, batch,
                                  perturb_scale)
            for s in seeds)

    best_k, best_points = None, None
    best_value = config.log_abs_det
    for k, (_, points) in enumerate(results):
        value = vandermonde_logabsdet(points, config.N, config.n)
        if value > best_value:
            best_k, best_value, best_points = k, value, points
    if best_k is None:
        logger.info(f'n={config.n}: no restart improved '
                    f'{config.log_abs_det:.10g}')
        return config
    labels = [seed_label(s) for s in seeds]
    logger.info(f'n={config.n}: restart {best_k} of {restarts} best, '
                f'log|det| {config.log_abs_det:.10g} -> {best_value:.10g}')
    return FeketeConfiguration(config.n, best_points, best_value,
                               config.seeds + tuple(labels))


def derived_seed_labels(seed, n: int, restarts: int) -> List[str]:
    """Labels of the greedy stream and of every restart stream for `n`."""
    labels = [seed_label(seed_entropy(seed, n, 0))]
    labels += [seed_label(s)
               for s in restart_seeds(seed_entropy(seed, n, 1), restarts)]
    return labels
