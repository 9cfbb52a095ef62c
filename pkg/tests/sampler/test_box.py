import numpy as np
from numpy.testing import assert_array_equal
from pytest import raises

from fastperc.errors import DimensionMismatch
from fastperc.sampler import Box, Rectangle, box, region_from_spec, vertex_index, vertex_mask


def test_box_geometry():
    b = box(3, 2, (1, 0, -1))
    assert b.volume == 125
    assert b.lo == (-1, -2, -3)
    assert b.hi == (3, 2, 1)
    assert b.contains([(3, 2, 1), (4, 0, 0)]).tolist() == [True, False]


def test_index_is_lexicographic():
    b = box(2, 1)
    pts = b.vertices()
    assert_array_equal(b.index(pts), np.arange(9))
    order = np.lexsort(pts.T[::-1])
    assert_array_equal(order, np.arange(9))
    assert_array_equal(b.coords([0, 8]), [[-1, -1], [1, 1]])


def test_index_outside_rejected():
    with raises(ValueError):
        box(1, 2).index([(3,)])
    with raises(DimensionMismatch):
        box(2, 2).index([(0,)])
    with raises(DimensionMismatch):
        Box(2, (0,), 1)


def test_boundary_mask():
    b = box(2, 2)
    assert b.boundary_mask().sum() == 25 - 9


def test_vertex_mask_forms():
    region = Rectangle((0, 0), (3, 2))
    full = vertex_mask(region)
    assert full.all() and len(full) == 12
    sub = vertex_mask(region, Rectangle((1, 1), (2, 5)))
    assert sub.sum() == 4
    pts = vertex_mask(region, [(0, 0), (3, 2)])
    assert np.flatnonzero(pts).tolist() == [0, 11]
    assert vertex_mask(region, pts) is pts
    assert vertex_mask(region, np.empty((0, 2), np.int64)).sum() == 0


def test_vertex_index():
    assert vertex_index(box(2, 3), (0, 0)) == 24


def test_region_specs():
    rect = Rectangle((-1, 2), (4, 5))
    assert region_from_spec('rect:-1,2:4,5') == rect
    with raises(ValueError):
        region_from_spec('ball:0:1')


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
