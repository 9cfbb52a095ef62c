"""
Open clusters of a BoxConfig: the union-find forest, clusters
restricted to a vertex subset, largest clusters and open m-pads.

Vertex subsets are anything `fastperc.sampler.box.vertex_mask`
accepts; vertex sets are returned as sorted row-major index arrays,
so sorted order is lexicographic order.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from fastperc.cluster.search import UNREACHABLE, bfs_levels_jit
from fastperc.cluster.union_find import union_edges_jit
from fastperc.core.convert_to_jit import convert_to_jit
from fastperc.errors import EmptySet, SourceOutsideSet
from fastperc.sampler.box import vertex_index, vertex_mask


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ClusterForest:
    """
    Union-find partition of `cfg` into open clusters. `roots[i]` is
    the root of vertex i and `sizes[r]` the size of the cluster rooted
    at r (zero for non-roots).
    """
    cfg: object
    parent: np.ndarray
    rank: np.ndarray
    sizes: np.ndarray
    roots: np.ndarray

    def find(self, x):
        return int(self.roots[vertex_index(self.cfg.region, x)])

    def connected(self, x, y):
        return self.find(x) == self.find(y)

    def cluster_size(self, x):
        return int(self.sizes[self.find(x)])

    def members(self, x):
        return np.flatnonzero(self.roots == self.find(x))

    @property
    def n_clusters(self):
        return int(np.count_nonzero(self.sizes))

    def root_sizes(self):
        """
        Cluster size of every vertex.
        """
        return self.sizes[self.roots]


def components(cfg, mask=None):
    """
    >>> from fastperc.sampler import BoxConfig, box
    >>> cfg = BoxConfig.from_edges(box(1, 2), [((-2,), (-1,)), ((-1,), (0,))])
    >>> forest = components(cfg)
    >>> forest.n_clusters, forest.cluster_size((0,))
    (3, 3)
    """
    n = cfg.n_vertices
    allowed = np.ones(n, np.bool_) if mask is None else mask
    parent, rank, size, roots = union_edges_jit(n, cfg.edges, allowed)
    sizes = np.where(parent == np.arange(n), size, 0)
    return ClusterForest(cfg, parent, rank, sizes, roots)


def restricted_cluster(cfg, x, A=None):
    """
    K_x(A): vertices joined to x by an open path with every vertex in A.
    """
    allowed = vertex_mask(cfg.region, A)
    if not cfg.region.contains(x)[0]:
        raise SourceOutsideSet('{} lies outside the region'.format(tuple(x)))
    start = vertex_index(cfg.region, x)
    if not allowed[start]:
        raise SourceOutsideSet('{} lies outside A'.format(tuple(x)))
    dist = bfs_levels_jit(cfg.indptr, cfg.indices, np.array([start], np.int64), allowed, -1)
    return np.flatnonzero(dist != UNREACHABLE)


def largest_cluster(forest, A=None):
    """
    (size, representative) of the largest cluster of the subgraph
    induced on A. Ties go to the cluster holding the lexicographically
    smallest vertex, which is also the representative returned.

    >>> from fastperc.sampler import BoxConfig, box
    >>> largest_cluster(components(BoxConfig.from_edges(box(1, 2), [])))
    (1, (-2,))
    """
    cfg = forest.cfg
    mask = vertex_mask(cfg.region, A)
    if not mask.any():
        raise EmptySet('largest_cluster needs a nonempty vertex set')
    if A is None:
        roots = forest.roots
    else:
        roots = components(cfg, mask).roots
    idx = np.flatnonzero(mask)
    labels, first, counts = np.unique(roots[idx], return_index=True, return_counts=True)
    top = counts.max()
    rep = idx[first[counts == top]].min()
    return int(top), tuple(int(c) for c in cfg.region.coords(rep))


def _cube(dimension, m):
    return np.ones((2 * m + 1,) * dimension, dtype=np.bool_)


def pad_connected(indptr, indices, strides, lo, center, m):
    """
    True iff B_m(center) is connected by open edges inside it.
    """
    d = len(center)
    side = 2 * m + 1
    total = side ** d
    seen = np.zeros(total, np.bool_)
    queue = np.empty(total, np.int64)
    start = 0
    local = 0
    for i in range(d):
        start += (center[i] - lo[i]) * strides[i]
        local = local * side + m
    seen[local] = True
    queue[0] = start
    head = 0
    tail = 1
    while head < tail:
        a = queue[head]
        head += 1
        for j in range(indptr[a], indptr[a + 1]):
            b = indices[j]
            rest = b
            local = 0
            inside = True
            for i in range(d):
                off = rest // strides[i] + lo[i] - center[i] + m
                rest = rest % strides[i]
                if off < 0 or off >= side:
                    inside = False
                local = local * side + off
            if inside and not seen[local]:
                seen[local] = True
                queue[tail] = b
                tail += 1
    return tail == total


pad_connected_jit = convert_to_jit(pad_connected)


def find_mpads(cfg, region=None, m=0, forest=None):
    """
    Centers x (lexicographic order, one point per row) such that
    B_m(x) lies in `region` and is an open m-pad of `cfg`.

    Candidates must first see a single global cluster on B_m(x); the
    survivors get a BFS bounded to B_m(x).
    """
    if m < 0:
        raise ValueError('m must be nonnegative')
    reg = cfg.region
    inside = vertex_mask(reg, region).reshape(reg.shape)
    if m == 0:
        return reg.coords(np.flatnonzero(inside.ravel()))

    footprint = _cube(reg.dimension, m)
    fits = ndimage.binary_erosion(inside, structure=footprint, border_value=0)
    if not fits.any():
        return np.empty((0, reg.dimension), dtype=np.int64)
    forest = components(cfg) if forest is None else forest
    roots = forest.roots.reshape(reg.shape)
    same = ndimage.minimum_filter(roots, footprint=footprint, mode='nearest') \
        == ndimage.maximum_filter(roots, footprint=footprint, mode='nearest')
    candidates = np.flatnonzero((fits & same).ravel())
    logger.debug('%d m-pad candidates of %d for m=%d', len(candidates),
                 int(fits.sum()), m)

    indptr, indices = cfg.indptr, cfg.indices
    centers = reg.coords(candidates)
    keep = np.array([pad_connected_jit(indptr, indices, reg.strides, reg.lo_array, c, m)
                     for c in centers], dtype=np.bool_)
    return centers[keep]


def pad_union(region, centers, m):
    """
    Mask of the union of the boxes B_m(c) over `centers`, clipped to
    `region`.
    """
    seeds = vertex_mask(region, centers).reshape(region.shape)
    if m == 0 or not seeds.any():
        return seeds.ravel()
    grown = ndimage.binary_dilation(seeds, structure=_cube(region.dimension, m))
    return grown.ravel()


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
