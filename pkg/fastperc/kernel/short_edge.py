"""
The (p, f) model: nearest-neighbour edges are open with probability p,
every longer edge {x, y} with probability f(x - y).
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from fastperc.errors import DimensionMismatch, ZeroDisplacement
from fastperc.kernel.kernel import Kernel, kernel_values, power_law
from fastperc.kernel.sums import tail_mass
from fastperc.utilities.lattice import as_points, canonical, canonical_key, sq_norm


@dataclass(frozen=True)
class ShortEdgeFunction:
    """
    f is given by a table of canonical displacement classes with
    infinity-norm at most `near_radius`, and beyond that radius by the
    power-law kernel `far` (or zero when `far` is None).
    """
    dimension: int
    nn_probability: float
    near: Tuple[Tuple[Tuple[int, ...], float], ...] = ()
    near_radius: int = 1
    far: Optional[Kernel] = None

    def __post_init__(self):
        if not 0.0 <= self.nn_probability <= 1.0:
            raise ValueError('p must lie in [0, 1]')
        if self.far is not None and self.far.dimension != self.dimension:
            raise DimensionMismatch('far kernel dimension differs')
        for key, value in self.near:
            if not 0.0 <= value < 1.0:
                raise ValueError('f({}) = {} is not in [0, 1)'.format(key, value))
        if self.far is not None:
            # The far part is radially decreasing, so its first shell
            # holds the largest value.
            edge = np.zeros((1, self.dimension), dtype=np.int64)
            edge[0, -1] = self.near_radius + 1
            if kernel_values(self.far, edge)[0] >= 1.0:
                raise ValueError('f reaches 1 beyond the table')

    def f_values(self, points):
        """
        f over the rows of `points`; the nearest-neighbour and zero
        displacements evaluate to 0 here.
        """
        pts = as_points(points, self.dimension)
        out = np.zeros(len(pts))
        reach = np.abs(pts).max(axis=1)
        inside = reach <= self.near_radius
        lookup = dict(self.near)
        for i, row in zip(np.flatnonzero(inside), canonical(pts[inside])):
            out[i] = lookup.get(tuple(int(c) for c in row), 0.0)
        if self.far is not None:
            far = ~inside
            out[far] = kernel_values(self.far, pts[far])
        out[sq_norm(pts) <= 1] = 0.0
        return out

    def probabilities(self, points):
        """
        Edge probabilities: p on nearest neighbours, f elsewhere.
        """
        pts = as_points(points, self.dimension)
        return np.where(sq_norm(pts) == 1, self.nn_probability, self.f_values(pts))

    def __call__(self, x):
        x = as_points(x, self.dimension)
        if not x.any():
            raise ZeroDisplacement('f is not defined at the origin')
        return float(self.probabilities(x)[0])

    def tail_mass(self, R):
        """
        Sum of f(x) over |x|_inf > R, for R >= near_radius.
        """
        assert R >= self.near_radius
        if self.far is None:
            return 0.0
        return tail_mass(self.far, R)

    def to_mapping(self):
        out = {'dimension': str(self.dimension),
               'p': repr(float(self.nn_probability)),
               'near_radius': str(self.near_radius),
               'near': '/'.join('{}:{}'.format(','.join(str(c) for c in key), repr(v))
                                for key, v in self.near)}
        if self.far is not None:
            out['gamma'] = repr(self.far.prefactor)
            out['exponent'] = repr(self.far.exponent)
        return out

    def spec(self):
        return ';'.join('{}={}'.format(k, v) for k, v in self.to_mapping().items())


def short_edge_function(dimension, p, table=None, near_radius=None, gamma=None,
                        exponent=2.0):
    """
    Builds f from a finite table plus an optional gamma |x|^-exponent tail.

    >>> sf = short_edge_function(1, 0.5, table={(2,): 0.1}, near_radius=2, gamma=1.2)
    >>> sf((2,)), sf((-1,)), round(sf((4,)), 6)
    (0.1, 0.5, 0.075)
    """
    table = dict(table or {})
    near = {}
    for key, value in table.items():
        if len(key) != dimension:
            raise DimensionMismatch('table key {} is not {}-dimensional'.format(key, dimension))
        near[canonical_key(key)] = float(value)
    if near_radius is None:
        near_radius = max([max(k) for k in near] + [1])
    far = None if gamma is None else power_law(dimension, gamma, exponent)
    return ShortEdgeFunction(dimension, float(p), tuple(sorted(near.items())),
                             int(near_radius), far)


def inverse_square(p, gamma):
    """
    The one-dimensional model f(x) = gamma / x^2 for |x| > 1.

    >>> round(inverse_square(0.5, 1.2)((3,)), 6)
    0.133333
    """
    return short_edge_function(1, p, gamma=gamma, exponent=2.0)


def short_edge_from_mapping(mapping):
    """
    Inverse of `ShortEdgeFunction.to_mapping`.
    """
    allowed = {'dimension', 'p', 'near_radius', 'near', 'gamma', 'exponent'}
    extra = set(mapping) - allowed
    if extra:
        raise ValueError('unexpected short-edge keys {}'.format(sorted(extra)))
    dimension = int(mapping['dimension'])
    table = {}
    for item in filter(None, mapping.get('near', '').split('/')):
        key, value = item.split(':')
        table[tuple(int(c) for c in key.split(','))] = float(value)
    gamma = mapping.get('gamma')
    return short_edge_function(
        dimension, float(mapping['p']), table,
        near_radius=int(mapping.get('near_radius', 1)),
        gamma=None if gamma is None else float(gamma),
        exponent=float(mapping.get('exponent', 2.0)),
    )


def gamma_from_theta(theta):
    """
    (2 / (1 + theta))^2, the tail constant of the one-dimensional
    counterexample; it exceeds 1 for every theta in [0, 1).

    >>> gamma_from_theta(0.0)
    4.0
    """
    assert 0.0 <= theta <= 1.0
    return (2.0 / (1.0 + theta)) ** 2


def make_counterexample_1d(f, gamma, n):
    """
    f_n(x) = f(x) for |x| <= n and gamma / x^2 for |x| > n.

    >>> sf = short_edge_function(1, 0.6, table={(2,): 0.2, (3,): 0.1}, near_radius=3)
    >>> fn = make_counterexample_1d(sf, 1.5, 2)
    >>> fn((2,)), fn((4,)) == 1.5 / 16
    (0.2, True)
    """
    if f.dimension != 1:
        raise DimensionMismatch('the counterexample lives in d = 1')
    if gamma <= 1:
        raise ValueError('gamma must exceed 1')
    if n < 1:
        raise ValueError('n must be positive')
    xs = np.arange(2, n + 1, dtype=np.int64).reshape(-1, 1)
    table = {(int(x),): float(v) for x, v in zip(xs[:, 0], f.f_values(xs))}
    return short_edge_function(1, f.nn_probability, table, near_radius=n,
                               gamma=gamma, exponent=2.0)


def short_edge_gap(f, gamma, n, radius=None):
    """
    Sum over |x| > n of |f(x) - gamma / x^2|, computed directly out to
    `radius` (default 4096 n) plus the gamma tail beyond it when `f`
    itself has finite range there.
    """
    radius = radius or 4096 * n
    xs = np.arange(n + 1, radius + 1, dtype=np.int64).reshape(-1, 1)
    gap = 2.0 * np.abs(f.f_values(xs) - gamma / xs[:, 0].astype(np.float64) ** 2).sum()
    if f.far is None:
        gap += 2.0 * gamma / radius
    return float(gap)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
