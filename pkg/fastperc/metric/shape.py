"""
Estimates of the shape norm mu along lattice directions, and checks
that scaled chemical balls B-hat_t / t sit between (1 - eps) B_mu and
(1 + eps) B_mu.

B_mu is the convex hull of the points v / mu(v) over a direction table
and all its lattice-symmetry images.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from fastperc.cluster.search import UNREACHABLE
from fastperc.core.replicates import map_replicates, mean_stderr
from fastperc.coupling.field import CouplingField
from fastperc.errors import DegenerateNorm, SubcriticalRegime
from fastperc.metric.proxy import dhat_from, enlarged_box, hat_index, make_proxy
from fastperc.sampler.box import box
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET, sample_box
from fastperc.utilities.lattice import cube_points


logger = logging.getLogger(__name__)

_TOL = 1e-9


@dataclass(frozen=True)
class MuRow:
    n: int
    mean: float
    stderr: float
    violations: int
    replicates: int
    empty: int
    seed: int


def _replicate_distances(k, beta, direction, n_values, rule, miss_budget):
    d = len(direction)
    x = np.asarray(direction, dtype=np.int64)
    reach = int(np.abs(x).max())

    def run(index, seed):
        field = CouplingField(seed)
        out = []
        for n in n_values:
            working = 2 * n * reach
            cfg = sample_box(k, beta, enlarged_box(d, working), field, miss_budget)
            proxy = make_proxy(cfg, rule, working=box(d, working))
            if proxy.empty:
                out.append((np.nan, False, True))
                continue
            from_origin = dhat_from(cfg, proxy, np.zeros(d, dtype=np.int64))
            from_mid = dhat_from(cfg, proxy, n * x)
            one = from_origin[hat_index(proxy, n * x)]
            two = from_origin[hat_index(proxy, 2 * n * x)]
            mid = from_mid[hat_index(proxy, 2 * n * x)]
            if UNREACHABLE in (one, two, mid):
                out.append((np.nan, False, True))
                continue
            out.append((one / n, bool(two > one + mid), False))
        return out

    return run


def mu_sequence(k, beta, direction, n_values, replicates, seed, rule='largest',
                miss_budget=DEFAULT_MISS_BUDGET, workers=1):
    """
    Monte Carlo means of D-hat(0, n x) / n for each n, sampled on
    B_{W + ceil(W/2)} with working box B_W, W = 2 n |x|_inf. Each
    replicate uses one coupling field for every n and also checks
    D-hat(0, 2nx) <= D-hat(0, nx) + D-hat(nx, 2nx).
    """
    if not any(direction):
        raise ValueError('direction must be a nonzero lattice vector')
    tail = k.power_tail
    if tail is not None and tail[1] <= 2 * k.dimension:
        logger.warning('exponent %g is outside the linear-distance regime s > 2d', tail[1])
    n_values = [int(n) for n in n_values]
    results = map_replicates(
        _replicate_distances(k, beta, direction, n_values, rule, miss_budget),
        replicates, seed, workers,
    )
    rows = []
    for j, n in enumerate(n_values):
        per_n = [r[j] for r in results]
        empty = sum(1 for r in per_n if r[2])
        if 2 * empty > replicates:
            raise SubcriticalRegime(
                'proxy cluster empty in {} of {} replicates at n={}'.format(empty, replicates, n)
            )
        ratios = [r[0] for r in per_n if not r[2]]
        mean, stderr = mean_stderr(ratios)
        violations = sum(1 for r in per_n if r[1])
        logger.info('n=%d: mean D-hat/n %.4f +- %.4f', n, mean, stderr)
        rows.append(MuRow(n, mean, stderr, violations, replicates, empty, seed))
    return rows


def _symmetry_images(v):
    v = np.abs(np.asarray(v, dtype=np.float64))
    images = set()
    for perm in itertools.permutations(range(len(v))):
        for signs in itertools.product((1.0, -1.0), repeat=len(v)):
            images.add(tuple(s * v[p] for s, p in zip(signs, perm)))
    return np.array(sorted(images))


@dataclass(frozen=True)
class MuTable:
    """
    mu values on a finite set of lattice directions.
    """
    dimension: int
    directions: Tuple[Tuple[int, ...], ...]
    values: Tuple[float, ...]

    def check(self):
        if any(not v > 0 for v in self.values):
            raise DegenerateNorm('mu must be positive on every tabulated direction')

    @cached_property
    def boundary(self):
        """
        Symmetrised points v / mu(v) on the boundary of B_mu.
        """
        self.check()
        pts = [_symmetry_images(v) / mu for v, mu in zip(self.directions, self.values)]
        return np.unique(np.concatenate(pts), axis=0)

    @cached_property
    def _hull(self):
        if self.dimension == 1:
            return None
        try:
            return ConvexHull(self.boundary)
        except QhullError as exc:
            raise DegenerateNorm('the direction table does not span a body') from exc

    def gauge(self, points):
        """
        The interpolated norm: smallest r with z in r B_mu.

        >>> inf_norm_table(2).gauge([[3, -1], [0, 2]]).round(9).tolist()
        [3.0, 2.0]
        """
        z = np.asarray(points, dtype=np.float64).reshape(-1, self.dimension)
        if self.dimension == 1:
            return np.abs(z[:, 0]) / np.abs(self.boundary).max()
        eq = self._hull.equations
        return (z @ eq[:, :-1].T / -eq[:, -1]).max(axis=1).clip(min=0.0)

    @property
    def extent(self):
        """
        Largest infinity norm on B_mu.
        """
        return float(np.abs(self.boundary).max())


def mu_table(entries, dimension=None):
    """
    Builds a MuTable from {direction: mu} where mu may be a number or
    the rows of `mu_sequence` (the largest n is used).

    >>> mu_table({(1, 0): 2.0, (1, 1): 2.5}).values
    (2.0, 2.5)
    """
    directions, values = [], []
    for direction, mu in entries.items():
        if not np.isscalar(mu):
            mu = max(mu, key=lambda row: row.n).mean
        directions.append(tuple(int(c) for c in direction))
        values.append(float(mu))
    dimension = len(directions[0]) if dimension is None else dimension
    return MuTable(dimension, tuple(directions), tuple(values))


def default_directions(dimension):
    """
    The axis directions plus the diagonal (1, ..., 1).
    """
    eye = [tuple(int(i == j) for j in range(dimension)) for i in range(dimension)]
    return eye + [(1,) * dimension] if dimension > 1 else eye


def inf_norm_table(dimension):
    return mu_table({v: 1.0 for v in default_directions(dimension)}, dimension)


@dataclass(frozen=True)
class ShapeReport:
    passed: bool
    magnitude: float
    outer_excess: float
    inner_deficit: float
    outer_point: Optional[Tuple[int, ...]]
    inner_point: Optional[Tuple[int, ...]]

    @property
    def outer_direction(self):
        return _direction(self.outer_point)

    @property
    def inner_direction(self):
        return _direction(self.inner_point)


def _direction(point):
    if point is None or not any(point):
        return None
    p = np.asarray(point, dtype=np.float64)
    return tuple(float(c) for c in p / np.linalg.norm(p))


def shape_check(ball, t, mu, eps, center=None):
    """
    Checks (1 - eps) B_mu <= ball / t <= (1 + eps) B_mu on lattice
    points. `ball` holds one lattice point per row. Reports the point
    exceeding (1 + eps) B_mu by most and the missing point deepest
    inside (1 - eps) B_mu.

    >>> report = shape_check(cube_points(2, 3), 3, inf_norm_table(2), 0.0)
    >>> report.passed, round(report.magnitude, 9)
    (True, 0.0)
    """
    if t <= 0:
        raise ValueError('t must be positive')
    mu.check()
    pts = np.asarray(ball, dtype=np.int64).reshape(-1, mu.dimension)
    if center is not None:
        pts = pts - np.asarray(center, dtype=np.int64)

    outer_excess, outer_point = -1.0, None
    if len(pts):
        scaled = mu.gauge(pts) / t
        i = int(np.argmax(scaled))
        outer_excess, outer_point = float(scaled[i] - 1.0), tuple(int(c) for c in pts[i])

    reach = int(np.ceil(t * mu.extent)) + 1
    grid = cube_points(mu.dimension, reach)
    base = 2 * reach + 1
    weights = base ** np.arange(mu.dimension - 1, -1, -1, dtype=np.int64)
    inside = pts[(np.abs(pts) <= reach).all(axis=1)]
    missing = grid[~np.isin((grid + reach) @ weights, (inside + reach) @ weights)]

    inner_deficit, inner_point = -np.inf, None
    if len(missing):
        scaled = mu.gauge(missing) / t
        i = int(np.argmin(scaled))
        inner_deficit, inner_point = float(1.0 - scaled[i]), tuple(int(c) for c in missing[i])

    passed = outer_excess <= eps + _TOL and inner_deficit < eps - _TOL
    magnitude = max(outer_excess, inner_deficit, 0.0)
    if not passed:
        logger.debug('shape violation %.4f (outer %s, inner %s)', magnitude,
                     outer_point, inner_point)
    return ShapeReport(passed, float(magnitude), outer_excess, inner_deficit,
                       outer_point, inner_point)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
