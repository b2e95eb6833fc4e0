"""
Membership oracles for bounded subsets of C^N.

Every oracle answers membership for a batch of points, knows a bounding
polyradius, samples points of the set from a seeded generator and can
project proposals back into the set.
"""
import logging
import math
from abc import ABCMeta, abstractmethod

import numpy as np

from pytransdiam.data._holders import DEFAULT_BISECTION_STEPS
from pytransdiam.polycore.polymap import PolynomialMap, map_to_dict
from pytransdiam.polycore.sphere import min_leading_norm_on_sphere
from pytransdiam.resultant.numeric import is_regular
from pytransdiam.utils.enums import SetKind
from pytransdiam.utils.exceptions import (DegenerateOracleError,
                                          DimensionMismatchError,
                                          InvalidDescriptorError,
                                          NonRegularMapError,
                                          RegularityAdvisoryError)
from pytransdiam.utils.numpy_utils import as_points, random_unit_vectors

logger = logging.getLogger(__name__)

DEFAULT_BOUNDARY_FRACTION = 0.75
MEMBERSHIP_RTOL = 1e-12
DEFAULT_REJECTION_ROUNDS = 64
# the sphere minimum is shrunk by this factor before it enters a radius
SPHERE_SAFETY = 0.99


def _uniform_disc(rng, shape, radius=1.0) -> np.ndarray:
    r = np.sqrt(rng.random(shape))
    theta = 2 * np.pi * rng.random(shape)
    return radius * r * np.exp(1j * theta)


def _unit_circle(rng, shape) -> np.ndarray:
    return np.exp(2j * np.pi * rng.random(shape))


class SetOracle(metaclass=ABCMeta):
    """
    A bounded set ``E`` in C^N given by membership.

    Invariants: sampled points are members, and members lie in the
    polydisc of :attr:`coordinate_radii` (hence in the ball of
    :attr:`radius`).
    """

    kind: SetKind = None

    def __init__(self, N: int, bisection_steps: int = DEFAULT_BISECTION_STEPS):
        self.N = int(N)
        if self.N < 1:
            raise DimensionMismatchError(expected='N >= 1', provided=N)
        self.bisection_steps = bisection_steps
        self.logger = logging.getLogger(__name__)

    @abstractmethod
    def contains(self, points) -> np.ndarray:
        """Boolean membership of each row of the ``(K, N)`` array."""
        raise NotImplementedError

    def __contains__(self, point) -> bool:
        pts = as_points(point, self.N)
        if pts.shape != (1, self.N):
            raise DimensionMismatchError(expected=self.N,
                                         provided=pts.shape[-1])
        return bool(self.contains(pts)[0])

    @property
    @abstractmethod
    def coordinate_radii(self) -> np.ndarray:
        """Radii ``rho_j`` with ``E`` inside ``{|z_j| <= rho_j}``."""
        raise NotImplementedError

    @property
    def radius(self) -> float:
        """A bound on the Euclidean norm of the members."""
        return float(np.linalg.norm(self.coordinate_radii))

    @abstractmethod
    def sample(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """`count` members of the set, shape ``(count, N)``."""
        raise NotImplementedError

    def perturb(self, points, scale: float,
                rng: np.random.Generator) -> np.ndarray:
        """Members of the set near `points`."""
        pts = as_points(points, self.N)
        noise = (rng.standard_normal(pts.shape)
                 + 1j * rng.standard_normal(pts.shape)) / math.sqrt(2)
        proposals = pts + scale * noise * self.coordinate_radii
        return self.project(proposals, pts)

    def project(self, proposals, anchors) -> np.ndarray:
        """
        Replace every non-member proposal by the last member found by
        bisection on the segment from its anchor (a member) to it.
        """
        proposals = as_points(proposals, self.N)
        anchors = as_points(anchors, self.N)
        result = proposals.copy()
        outside = ~self.contains(proposals)
        if np.any(outside):
            result[outside] = self._bisect(anchors[outside],
                                           proposals[outside])
        return result

    def _bisect(self, inside: np.ndarray, outside: np.ndarray) -> np.ndarray:
        lo = np.zeros(len(inside))
        hi = np.ones(len(inside))
        step = outside - inside
        for _ in range(self.bisection_steps):
            mid = 0.5 * (lo + hi)
            ok = self.contains(inside + mid[:, None] * step)
            lo = np.where(ok, mid, lo)
            hi = np.where(ok, hi, mid)
        return inside + lo[:, None] * step

    def boundary_push(self, points, rng: np.random.Generator) -> np.ndarray:
        """Move members towards the boundary along random directions."""
        pts = as_points(points, self.N)
        far = pts + 3 * self.radius * random_unit_vectors(rng, len(pts),
                                                          self.N)
        return self._bisect(pts, far)

    def fattened(self, eps: float) -> 'SetOracle':
        """The closed ``eps``-neighborhood, where it has a closed form."""
        raise NotImplementedError(f'{type(self).__name__} has no closed '
                                  f'form eps-neighborhood')

    @abstractmethod
    def descriptor(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f'{type(self).__name__}({self.descriptor()})'


class PolydiscOracle(SetOracle):
    """``{|z_j| <= r_j}`` for a polyradius ``r``."""

    kind = SetKind.POLYDISC

    def __init__(self, radii, boundary_fraction=DEFAULT_BOUNDARY_FRACTION,
                 **kwargs):
        radii = np.atleast_1d(np.asarray(radii, dtype=float))
        if np.any(radii <= 0):
            raise InvalidDescriptorError(what='polydisc',
                                         reason='radii must be positive')
        super().__init__(len(radii), **kwargs)
        self.radii = radii
        self.boundary_fraction = boundary_fraction

    @classmethod
    def unit(cls, N: int, **kwargs) -> 'PolydiscOracle':
        return cls(np.ones(N), **kwargs)

    def contains(self, points) -> np.ndarray:
        pts = as_points(points, self.N)
        return np.all(np.abs(pts) <= self.radii * (1 + MEMBERSHIP_RTOL),
                      axis=1)

    @property
    def coordinate_radii(self) -> np.ndarray:
        return self.radii

    def sample(self, count, rng) -> np.ndarray:
        shape = (count, self.N)
        torus = _unit_circle(rng, shape) * self.radii
        inner = _uniform_disc(rng, shape) * self.radii
        on_boundary = rng.random(count) < self.boundary_fraction
        return np.where(on_boundary[:, None], torus, inner)

    def project(self, proposals, anchors=None) -> np.ndarray:
        pts = as_points(proposals, self.N)
        mod = np.abs(pts)
        factor = np.where(mod > self.radii,
                          self.radii / np.where(mod > 0, mod, 1), 1.0)
        return pts * factor

    def fattened(self, eps) -> 'PolydiscOracle':
        return PolydiscOracle(self.radii + eps, self.boundary_fraction,
                              bisection_steps=self.bisection_steps)

    def descriptor(self) -> dict:
        return {'kind': 'polydisc', 'radii': self.radii.tolist()}


class BallOracle(SetOracle):
    """The Euclidean ball ``{|z| <= R}`` in C^N."""

    kind = SetKind.BALL

    def __init__(self, N: int, radius: float = 1.0,
                 boundary_fraction=DEFAULT_BOUNDARY_FRACTION, **kwargs):
        super().__init__(N, **kwargs)
        if radius <= 0:
            raise InvalidDescriptorError(what='ball',
                                         reason='radius must be positive')
        self.ball_radius = float(radius)
        self.boundary_fraction = boundary_fraction

    def contains(self, points) -> np.ndarray:
        pts = as_points(points, self.N)
        return np.linalg.norm(pts, axis=1) <= \
            self.ball_radius * (1 + MEMBERSHIP_RTOL)

    @property
    def coordinate_radii(self) -> np.ndarray:
        return np.full(self.N, self.ball_radius)

    @property
    def radius(self) -> float:
        return self.ball_radius

    def sample(self, count, rng) -> np.ndarray:
        u = random_unit_vectors(rng, count, self.N)
        r = rng.random(count) ** (1.0 / (2 * self.N))
        on_boundary = rng.random(count) < self.boundary_fraction
        r = np.where(on_boundary, 1.0, r)
        return self.ball_radius * r[:, None] * u

    def project(self, proposals, anchors=None) -> np.ndarray:
        pts = as_points(proposals, self.N)
        norms = np.linalg.norm(pts, axis=1)
        factor = np.where(norms > self.ball_radius,
                          self.ball_radius / np.where(norms > 0, norms, 1),
                          1.0)
        return pts * factor[:, None]

    def fattened(self, eps) -> 'BallOracle':
        return BallOracle(self.N, self.ball_radius + eps,
                          self.boundary_fraction,
                          bisection_steps=self.bisection_steps)

    def descriptor(self) -> dict:
        return {'kind': 'ball', 'N': self.N, 'radius': self.ball_radius}


class IntervalOracle(SetOracle):
    """A real segment ``[a, b]`` inside C."""

    kind = SetKind.INTERVAL

    def __init__(self, a: float = -1.0, b: float = 1.0, **kwargs):
        super().__init__(1, **kwargs)
        if not a < b:
            raise InvalidDescriptorError(what='interval',
                                         reason=f'need a < b, got {a}, {b}')
        self.a, self.b = float(a), float(b)
        self._tol = MEMBERSHIP_RTOL * max(1.0, abs(a), abs(b))

    def contains(self, points) -> np.ndarray:
        z = as_points(points, 1)[:, 0]
        return ((np.abs(z.imag) <= self._tol)
                & (z.real >= self.a - self._tol)
                & (z.real <= self.b + self._tol))

    @property
    def coordinate_radii(self) -> np.ndarray:
        return np.array([max(abs(self.a), abs(self.b))])

    def sample(self, count, rng) -> np.ndarray:
        """Half a uniform grid, half arcsine distributed draws."""
        mid, half = 0.5 * (self.a + self.b), 0.5 * (self.b - self.a)
        grid = np.linspace(self.a, self.b, count // 2)
        draws = mid + half * np.cos(np.pi * rng.random(count - count // 2))
        pts = np.concatenate([grid, draws]).astype(np.complex128)
        return pts.reshape(-1, 1)

    def perturb(self, points, scale, rng) -> np.ndarray:
        pts = as_points(points, 1)
        noise = scale * (self.b - self.a) * rng.standard_normal(pts.shape)
        return self.project(pts.real + noise, pts)

    def project(self, proposals, anchors=None) -> np.ndarray:
        pts = as_points(proposals, 1)
        return np.clip(pts.real, self.a, self.b).astype(np.complex128)

    def descriptor(self) -> dict:
        return {'kind': 'interval', 'a': self.a, 'b': self.b}


class PointsOracle(SetOracle):
    """A finite set of points."""

    kind = SetKind.POINTS

    def __init__(self, points, **kwargs):
        pts = np.asarray(points, dtype=np.complex128)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.shape[0] == 0:
            raise InvalidDescriptorError(what='points', reason='empty set')
        super().__init__(pts.shape[1], **kwargs)
        self.points = pts
        scale = max(1.0, float(np.max(np.abs(pts))))
        self._tol = 1e-9 * scale

    def _distances(self, pts) -> np.ndarray:
        return np.linalg.norm(pts[:, None, :] - self.points[None, :, :],
                              axis=2)

    def contains(self, points) -> np.ndarray:
        pts = as_points(points, self.N)
        return np.min(self._distances(pts), axis=1) <= self._tol

    @property
    def coordinate_radii(self) -> np.ndarray:
        radii = np.max(np.abs(self.points), axis=0)
        return np.where(radii > 0, radii, 1.0)

    def sample(self, count, rng) -> np.ndarray:
        return self.points[rng.integers(len(self.points), size=count)]

    def perturb(self, points, scale, rng) -> np.ndarray:
        return self.sample(len(as_points(points, self.N)), rng)

    def project(self, proposals, anchors=None) -> np.ndarray:
        pts = as_points(proposals, self.N)
        return self.points[np.argmin(self._distances(pts), axis=1)]

    def descriptor(self) -> dict:
        return {'kind': 'points',
                'points': [[[z.real, z.imag] for z in row]
                           for row in self.points]}


class MembershipOracle(SetOracle):
    """
    Base for sets known only through a membership predicate inside a
    bounding polydisc of radius ``R``: rejection sampling plus a bisection
    push towards the boundary.
    """

    def __init__(self, N: int, bounding_radius: float,
                 boundary_fraction=DEFAULT_BOUNDARY_FRACTION,
                 rejection_rounds=DEFAULT_REJECTION_ROUNDS, **kwargs):
        super().__init__(N, **kwargs)
        self.bounding_radius = float(bounding_radius)
        self.boundary_fraction = boundary_fraction
        self.rejection_rounds = rejection_rounds

    @property
    def coordinate_radii(self) -> np.ndarray:
        return np.full(self.N, self.bounding_radius)

    @property
    def radius(self) -> float:
        return self.bounding_radius

    def rejection_sample(self, count, rng) -> np.ndarray:
        found = []
        total = 0
        batch = max(4 * count, 256)
        for _ in range(self.rejection_rounds):
            z = _uniform_disc(rng, (batch, self.N), self.bounding_radius)
            z = z[self.contains(z)]
            found.append(z)
            total += len(z)
            if total >= count:
                return np.concatenate(found)[:count]
        raise DegenerateOracleError(count=count, oracle=repr(self),
                                    retries=self.rejection_rounds)

    def sample(self, count, rng) -> np.ndarray:
        pts = self.rejection_sample(count, rng)
        push = rng.random(count) < self.boundary_fraction
        if np.any(push):
            pts[push] = self.boundary_push(pts[push], rng)
        return pts


def _regularity_radius(F: PolynomialMap, target_radius: float,
                       samples: int, seed) -> float:
    """
    ``R = max(1, C/m + (R_E/m)^(1/d))`` so that ``|z| > R`` forces
    ``|F(z)| > R_E``, with ``m`` the shrunk sphere minimum of ``|F_h|`` and
    ``C`` the lower-order coefficient norm.
    """
    m = min_leading_norm_on_sphere(F.leading_part(), samples, seed)
    if not m > 0:
        raise RegularityAdvisoryError(minimum=m)
    m *= SPHERE_SAFETY
    C = F.lower_order_norm()
    return max(1.0, C / m + (target_radius / m) ** (1.0 / F.degree))


class _PreimageBase(object):

    def _init_preimage(self, F: PolynomialMap, E: SetOracle):
        if F.N != E.N:
            raise DimensionMismatchError(expected=E.N, provided=F.N)
        self.F = F
        self.E = E
        self.evaluator = F.float_evaluator

    def contains(self, points) -> np.ndarray:
        pts = as_points(points, self.N)
        return self.E.contains(self.evaluator(pts))

    def descriptor(self) -> dict:
        return {'kind': 'preimage', 'map': map_to_dict(self.F),
                'set': self.E.descriptor()}


class AffinePreimageOracle(_PreimageBase, SetOracle):
    """
    ``F^-1 E`` for an invertible affine map ``F(z) = A z + b``. Samples are
    pulled back exactly, ``z = A^-1 (w - b)`` for samples ``w`` of ``E``.
    """

    kind = SetKind.PREIMAGE

    def __init__(self, F: PolynomialMap, E: SetOracle, **kwargs):
        super().__init__(F.N, **kwargs)
        self._init_preimage(F, E)
        N = F.N
        self.A = self.evaluator.coeffs[:, 1:N + 1]
        self.b = self.evaluator.coeffs[:, 0]
        if np.linalg.matrix_rank(self.A) < N:
            raise NonRegularMapError(reason='linear part is singular')
        self.A_inv = np.linalg.inv(self.A)

    def pullback(self, w: np.ndarray) -> np.ndarray:
        return np.linalg.solve(self.A, (w - self.b).T).T

    @property
    def coordinate_radii(self) -> np.ndarray:
        radii = np.abs(self.A_inv) @ (self.E.coordinate_radii
                                      + np.abs(self.b))
        return np.where(radii > 0, radii, 1.0)

    def sample(self, count, rng) -> np.ndarray:
        return self.pullback(self.E.sample(count, rng))

    def perturb(self, points, scale, rng) -> np.ndarray:
        w = self.evaluator(as_points(points, self.N))
        return self.pullback(self.E.perturb(w, scale, rng))

    def project(self, proposals, anchors) -> np.ndarray:
        w = self.evaluator(as_points(proposals, self.N))
        anchors_w = self.evaluator(as_points(anchors, self.N))
        return self.pullback(self.E.project(w, anchors_w))


class RootPreimageOracle(_PreimageBase, SetOracle):
    """
    ``F^-1 E`` in dimension one: samples ``w`` of ``E`` are pulled back
    through all roots of ``F(z) = w``.
    """

    kind = SetKind.PREIMAGE

    def __init__(self, F: PolynomialMap, E: SetOracle, bounding_radius,
                 **kwargs):
        super().__init__(1, **kwargs)
        self._init_preimage(F, E)
        self.bounding_radius = float(bounding_radius)
        # numpy.roots wants the highest power first
        self.poly = self.evaluator.coeffs[0, ::-1].copy()

    @property
    def coordinate_radii(self) -> np.ndarray:
        return np.array([self.bounding_radius])

    def _roots(self, w: complex) -> np.ndarray:
        poly = self.poly.copy()
        poly[-1] -= w
        return np.roots(poly)

    def sample(self, count, rng) -> np.ndarray:
        d = self.F.degree
        found, total = [], 0
        for _ in range(DEFAULT_REJECTION_ROUNDS):
            w = self.E.sample(-(-count // d), rng)[:, 0]
            roots = np.concatenate([self._roots(v) for v in w])
            roots = roots.reshape(-1, 1)
            roots = roots[self.contains(roots)]
            found.append(roots)
            total += len(roots)
            if total >= count:
                pts = np.concatenate(found)
                rng.shuffle(pts)
                return pts[:count]
        raise DegenerateOracleError(count=count, oracle=repr(self),
                                    retries=DEFAULT_REJECTION_ROUNDS)

    def perturb(self, points, scale, rng) -> np.ndarray:
        pts = as_points(points, 1)
        w = self.evaluator(pts)
        w2 = self.E.perturb(w, scale, rng)[:, 0]
        out = np.empty_like(pts)
        for k, (z, v) in enumerate(zip(pts[:, 0], w2)):
            roots = self._roots(v)
            out[k, 0] = roots[np.argmin(np.abs(roots - z))]
        return self.project(out, pts)

    def project(self, proposals, anchors) -> np.ndarray:
        pts = as_points(proposals, 1)
        ok = self.contains(pts)
        if np.all(ok) or anchors is None:
            return pts
        return SetOracle.project(self, pts, anchors)


class PreimageOracle(_PreimageBase, MembershipOracle):
    """``F^-1 E`` by membership ``z in F^-1 E  <=>  F(z) in E``."""

    kind = SetKind.PREIMAGE

    def __init__(self, F: PolynomialMap, E: SetOracle, bounding_radius,
                 **kwargs):
        super().__init__(F.N, bounding_radius, **kwargs)
        self._init_preimage(F, E)


def preimage_oracle(F: PolynomialMap, E: SetOracle,
                    sphere_samples: int = 4096, seed=0,
                    **kwargs) -> SetOracle:
    """
    The oracle of ``F^-1 E``.

    :raises NonRegularMapError: If ``Res(leading_part(F)) == 0``.
    :raises RegularityAdvisoryError: If the sampled sphere minimum of
        ``|F_h|`` is not positive.
    """
    if not is_regular(F):
        raise NonRegularMapError(reason='Res(F_h) = 0')
    if F.degree == 1:
        return AffinePreimageOracle(F, E, **kwargs)
    R = _regularity_radius(F, E.radius, sphere_samples, seed)
    logger.info(f'preimage bounding radius {R:.6g}')
    if F.N == 1:
        return RootPreimageOracle(F, E, R, **kwargs)
    return PreimageOracle(F, E, R, **kwargs)
