"""
Finite lattice regions. Vertices are numbered row-major, which is also
their lexicographic order.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np

from fastperc.errors import DimensionMismatch
from fastperc.utilities.lattice import as_points


class _LatticeRegion:

    @property
    def dimension(self):
        return len(self.lo)

    @cached_property
    def lo_array(self):
        return np.asarray(self.lo, dtype=np.int64)

    @cached_property
    def hi_array(self):
        return np.asarray(self.hi, dtype=np.int64)

    @cached_property
    def shape(self):
        return tuple(int(h - l + 1) for l, h in zip(self.lo, self.hi))

    @property
    def volume(self):
        return int(np.prod(self.shape))

    @cached_property
    def strides(self):
        out = np.ones(self.dimension, dtype=np.int64)
        for i in range(self.dimension - 2, -1, -1):
            out[i] = out[i + 1] * self.shape[i + 1]
        return out

    def contains(self, points):
        pts = as_points(points, self.dimension)
        return ((pts >= self.lo_array) & (pts <= self.hi_array)).all(axis=1)

    def index(self, points):
        """
        Row-major vertex indices of `points`, which must lie inside.
        """
        pts = as_points(points)
        if pts.shape[1] != self.dimension:
            raise DimensionMismatch('points are not {}-dimensional'.format(self.dimension))
        if not self.contains(pts).all():
            raise ValueError('point outside {}'.format(self))
        return (pts - self.lo_array) @ self.strides

    def coords(self, indices):
        idx = np.asarray(indices, dtype=np.int64)
        out = np.empty(idx.shape + (self.dimension,), dtype=np.int64)
        rest = idx.copy()
        for i in range(self.dimension):
            out[..., i], rest = np.divmod(rest, self.strides[i])
        return out + self.lo_array

    def vertices(self):
        return self.coords(np.arange(self.volume))

    def boundary_mask(self):
        """
        Vertices on the outer face of the region.
        """
        pts = self.vertices()
        return ((pts == self.lo_array) | (pts == self.hi_array)).any(axis=1)

    def sub_box_mask(self, center, radius):
        """
        Membership mask of B_radius(center) intersected with the region.
        """
        pts = self.vertices()
        return (np.abs(pts - np.asarray(center, dtype=np.int64)) <= radius).all(axis=1)

    def extent(self):
        return tuple(int(h - l) for l, h in zip(self.lo, self.hi))


@dataclass(frozen=True)
class Rectangle(_LatticeRegion):
    """
    Axis-aligned region lo <= x <= hi, coordinatewise.

    >>> Rectangle((0, 0), (2, 1)).volume
    6
    """
    lo: Tuple[int, ...]
    hi: Tuple[int, ...]

    def __post_init__(self):
        assert len(self.lo) == len(self.hi)
        assert all(l <= h for l, h in zip(self.lo, self.hi))


@dataclass(frozen=True)
class Box(_LatticeRegion):
    """
    B_m(center) = {y : |y - center|_inf <= m}, with (2m+1)^d vertices.

    >>> b = Box(2, (0, 0), 1)
    >>> b.volume, b.lo, b.hi
    (9, (-1, -1), (1, 1))
    >>> b.index([[0, 0]]).tolist()
    [4]
    """
    dim: int
    center: Tuple[int, ...]
    radius: int

    def __post_init__(self):
        if len(self.center) != self.dim:
            raise DimensionMismatch('center is not {}-dimensional'.format(self.dim))
        if self.radius < 0:
            raise ValueError('radius must be nonnegative')

    @property
    def lo(self):
        return tuple(int(c) - self.radius for c in self.center)

    @property
    def hi(self):
        return tuple(int(c) + self.radius for c in self.center)


def box(dimension, radius, center=None):
    """
    B_radius(center), centered at the origin by default.
    """
    center = (0,) * dimension if center is None else tuple(int(c) for c in center)
    return Box(dimension, center, int(radius))


def vertex_mask(region, subset=None):
    """
    Boolean membership mask over the vertices of `region`.

    `subset` may be None (every vertex), a mask already, another
    Box/Rectangle (intersected with `region`) or an array of points,
    which must lie inside `region`.

    >>> vertex_mask(box(1, 2), box(1, 1)).astype(int).tolist()
    [0, 1, 1, 1, 0]
    """
    if subset is None:
        return np.ones(region.volume, dtype=np.bool_)
    if isinstance(subset, _LatticeRegion):
        pts = region.vertices()
        return ((pts >= subset.lo_array) & (pts <= subset.hi_array)).all(axis=1)
    arr = np.asarray(subset)
    if arr.dtype == np.bool_:
        assert arr.shape == (region.volume,)
        return arr
    mask = np.zeros(region.volume, dtype=np.bool_)
    if arr.size:
        mask[region.index(arr)] = True
    return mask


def vertex_index(region, x):
    """
    Row-major index of the single lattice point `x`.
    """
    return int(region.index(x)[0])


def region_spec(region):
    if isinstance(region, Box):
        return 'box:{}:{}'.format(','.join(map(str, region.center)), region.radius)
    return 'rect:{}:{}'.format(','.join(map(str, region.lo)), ','.join(map(str, region.hi)))


def region_from_spec(spec):
    """
    >>> region_from_spec(region_spec(box(2, 3)))
    Box(dim=2, center=(0, 0), radius=3)
    """
    kind, first, second = spec.split(':')
    if kind == 'box':
        center = tuple(int(c) for c in first.split(','))
        return Box(len(center), center, int(second))
    if kind == 'rect':
        return Rectangle(tuple(int(c) for c in first.split(',')),
                         tuple(int(c) for c in second.split(',')))
    raise ValueError('unknown region kind {!r}'.format(kind))


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
