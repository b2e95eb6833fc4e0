"""
Filled Julia sets ``K_F = {z : sup_n |F^n(z)| < inf}`` as oracles.
"""
import logging

import numpy as np

from pytransdiam.data._holders import EscapeParameters
from pytransdiam.dynamics.escape import escape_parameters
from pytransdiam.fekete.oracle import MembershipOracle
from pytransdiam.polycore.polymap import PolynomialMap, map_to_dict
from pytransdiam.resultant.numeric import abs_resultant, is_regular
from pytransdiam.utils.enums import SetKind
from pytransdiam.utils.exceptions import NonRegularMapError
from pytransdiam.utils.numpy_utils import as_points

logger = logging.getLogger(__name__)


class FilledJuliaOracle(MembershipOracle):
    """
    Points whose first ``cap`` iterates stay within the escape radius. This
    contains ``K_F`` and shrinks towards it as the cap grows.
    """

    kind = SetKind.FILLED_JULIA

    def __init__(self, F: PolynomialMap, params: EscapeParameters, **kwargs):
        super().__init__(F.N, params.radius, **kwargs)
        self.F = F
        self.params = params
        self.evaluator = F.float_evaluator

    def members_at_cap(self, points, cap: int) -> np.ndarray:
        """Membership with the iteration cap replaced by `cap`."""
        z = as_points(points, self.N)
        inside = np.ones(len(z), dtype=bool)
        active = np.arange(len(z))
        for step in range(cap + 1):
            ok = np.linalg.norm(z, axis=1) <= self.params.radius
            inside[active[~ok]] = False
            active, z = active[ok], z[ok]
            if step == cap or not len(active):
                break
            z = self.evaluator(z)
        return inside

    def contains(self, points) -> np.ndarray:
        return self.members_at_cap(points, self.params.cap)

    def descriptor(self) -> dict:
        return {'kind': 'filled_julia', 'map': map_to_dict(self.F),
                'params': self.params._asdict()}


def filled_julia_oracle(F: PolynomialMap, params: EscapeParameters = None,
                        **kwargs) -> FilledJuliaOracle:
    """
    :raises NonRegularMapError: If ``Res(leading_part(F)) == 0``.
    :raises PreconditionFailure: If ``d < 2``.
    """
    if not is_regular(F):
        raise NonRegularMapError(reason='Res(F_h) = 0')
    params = escape_parameters(F) if params is None else params
    return FilledJuliaOracle(F, params, **kwargs)


def julia_diam_prediction(F: PolynomialMap) -> float:
    """
    ``|Res(F_h)|^(-1 / (N d^(N-1) (d-1)))``, the transfinite diameter of
    ``K_F``. Only the leading part of `F` enters.

    :raises NonRegularMapError: If the resultant vanishes.
    """
    N, d = F.N, F.degree
    if d < 2:
        raise NonRegularMapError(reason=f'degree {d} has no filled Julia set')
    res_abs = abs_resultant(F)
    if res_abs == 0:
        raise NonRegularMapError(reason='Res(F_h) = 0')
    return res_abs ** (-1.0 / (N * d ** (N - 1) * (d - 1)))


def invariance_check(oracle: FilledJuliaOracle, points,
                     cap: int = None) -> bool:
    """
    For each point that is a member at `cap`, check that its image is a
    member at ``cap - 1``.
    """
    cap = oracle.params.cap if cap is None else cap
    pts = as_points(points, oracle.N)
    members = pts[oracle.members_at_cap(pts, cap)]
    if not len(members):
        return True
    images = oracle.evaluator(members)
    ok = oracle.members_at_cap(images, cap - 1)
    if not np.all(ok):
        logger.warning(f'{np.count_nonzero(~ok)} member images fail at cap '
                       f'{cap - 1}')
    return bool(np.all(ok))
