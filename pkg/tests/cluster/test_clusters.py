import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import integers
from numpy.testing import assert_array_equal
from pytest import raises
from scipy.sparse.csgraph import connected_components

from fastperc.cluster import (
    UNREACHABLE, bfs_levels, components, find_mpads, largest_cluster, pad_union,
    restricted_cluster,
)
from fastperc.coupling import CouplingField
from fastperc.errors import EmptySet, SourceOutsideSet
from fastperc.kernel import power_law
from fastperc.sampler import BoxConfig, Rectangle, box, sample_box, vertex_mask

from ..fixtures import full_grid, path_config, square_config


@given(integers(min_value=0, max_value=2 ** 32))
@settings(deadline=None, max_examples=25)
def test_components_match_scipy(seed):
    cfg = sample_box(power_law(2, 1.0, 3.5), 0.6, box(2, 4), CouplingField(seed))
    forest = components(cfg)
    n, labels = connected_components(cfg.adjacency, directed=False)
    assert forest.n_clusters == n
    _, first = np.unique(forest.roots, return_index=True)
    assert len(np.unique(labels[first])) == n
    assert_array_equal(np.bincount(labels)[labels], forest.root_sizes())


def test_path_is_one_cluster():
    forest = components(path_config(4))
    assert forest.n_clusters == 5
    assert forest.cluster_size((0,)) == 5
    assert forest.connected((0,), (4,))
    assert not forest.connected((0,), (-1,))
    assert_array_equal(forest.members((2,)), [4, 5, 6, 7, 8])


def test_restricted_cluster():
    cfg = path_config(4)
    assert_array_equal(restricted_cluster(cfg, (0,)), [4, 5, 6, 7, 8])
    cut = Rectangle((-4,), (2,))
    assert_array_equal(restricted_cluster(cfg, (0,), cut), [4, 5, 6])
    blocked = [(0,), (1,), (3,), (4,)]
    assert_array_equal(restricted_cluster(cfg, (0,), blocked), [4, 5])


def test_restricted_cluster_source_checks():
    cfg = path_config(3)
    with raises(SourceOutsideSet):
        restricted_cluster(cfg, (1,), [(0,)])
    with raises(SourceOutsideSet):
        restricted_cluster(cfg, (9,))


def test_largest_cluster_ties_go_to_the_smallest_vertex():
    region = box(1, 4)
    cfg = BoxConfig.from_edges(region, [((2,), (3,)), ((-3,), (-2,)), ((0,), (1,))])
    assert largest_cluster(components(cfg)) == (2, (-3,))
    assert largest_cluster(components(cfg), Rectangle((0,), (4,))) == (2, (0,))
    with raises(EmptySet):
        largest_cluster(components(cfg), np.zeros(region.volume, np.bool_))


def test_largest_cluster_is_restricted_to_A():
    cfg = path_config(4)
    # without the origin only 1..4 stay joined
    A = np.ones(9, np.bool_)
    A[4] = False
    assert largest_cluster(components(cfg), A) == (4, (1,))


def test_mpads_on_the_full_grid():
    cfg = full_grid(2, 3)
    assert len(find_mpads(cfg, m=0)) == 49
    pads = find_mpads(cfg, m=1)
    assert len(pads) == 25
    assert_array_equal(pads[0], [-2, -2])
    assert len(find_mpads(cfg, m=3)) == 1
    assert len(find_mpads(cfg, m=4)) == 0


def test_mpads_need_internal_connections():
    # the square is connected but B_1 around it has isolated vertices
    cfg = square_config()
    assert len(find_mpads(cfg, m=1)) == 0
    with raises(ValueError):
        find_mpads(cfg, m=-1)


def test_mpads_respect_the_region():
    cfg = full_grid(2, 3)
    pads = find_mpads(cfg, Rectangle((0, -3), (3, 3)), m=1)
    assert len(pads) == 10
    assert (pads[:, 0] >= 1).all()


def test_pad_union():
    region = box(2, 3)
    mask = pad_union(region, np.array([[0, 0], [3, 3]]), 1)
    assert mask.sum() == 13
    corner = vertex_mask(region, box(2, 1, (3, 3)))
    assert_array_equal(mask, vertex_mask(region, box(2, 1)) | corner)
    assert pad_union(region, np.empty((0, 2), np.int64), 2).sum() == 0


def test_bfs_levels_depth_limit():
    cfg = path_config(5)
    start = np.array([5], np.int64)
    dist = bfs_levels(cfg.indptr, cfg.indices, start, np.ones(11, np.bool_), 2)
    assert dist[5:8].tolist() == [0, 1, 2]
    assert dist[8] == UNREACHABLE


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
