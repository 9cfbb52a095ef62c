import numpy as np
from numpy.testing import assert_array_equal
from pytest import raises

from fastperc.errors import IsolatedStart
from fastperc.walk import return_frequency, walk_stats

from ..fixtures import full_grid, path_config


def test_single_edge_returns_every_other_step():
    cfg = path_config(1)
    stats = walk_stats(cfg, (0,), 9, seed=0)
    assert stats.returns == 4
    assert stats.first_return == 2
    assert return_frequency(cfg, (0,), 2, 5, seed=0).value == 1.0
    assert return_frequency(cfg, (0,), 1, 5, seed=0).value == 0.0


def test_isolated_start():
    with raises(IsolatedStart):
        walk_stats(path_config(2), (-1,), 10, seed=0)
    with raises(IsolatedStart):
        return_frequency(path_config(2), (-2,), 10, 3, seed=0)


def test_walks_are_reproducible():
    cfg = full_grid(2, 3)
    a = walk_stats(cfg, (0, 0), 200, seed=8)
    b = walk_stats(cfg, (0, 0), 200, seed=8)
    assert_array_equal(a.visits, b.visits)
    assert a.visits.sum() == 201
    c = walk_stats(cfg, (0, 0), 200, seed=9)
    assert not np.array_equal(a.visits, c.visits)


def test_walk_stays_in_its_cluster():
    stats = walk_stats(path_config(3), (1,), 100, seed=2)
    assert stats.visits[:3].sum() == 0
    assert stats.visits[3:].sum() == 101


def test_bipartite_grid_returns_on_even_steps():
    stats = walk_stats(full_grid(2, 2), (0, 0), 50, seed=1)
    assert stats.first_return == -1 or stats.first_return % 2 == 0


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
