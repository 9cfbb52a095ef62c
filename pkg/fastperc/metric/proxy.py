"""
Finite-volume stand-ins for the infinite cluster, the projection x -> x-hat
onto them and the pseudometric D-hat(x, y) = D(x-hat, y-hat).
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial import cKDTree

from fastperc.cluster.clusters import components
from fastperc.cluster.search import bfs_levels_jit
from fastperc.errors import EmptyProxy
from fastperc.sampler.box import box, vertex_mask


PROXY_RULES = ('largest', 'boundary', 'given')


@dataclass(frozen=True, eq=False)
class InfiniteClusterProxy:
    """
    `vertices` are sorted row-major indices into `region`; sorted order
    is lexicographic, which the projection's tie-break relies on.
    """
    region: object
    vertices: np.ndarray
    rule: str = 'largest'

    def __post_init__(self):
        assert self.rule in PROXY_RULES

    @property
    def empty(self):
        return len(self.vertices) == 0

    @cached_property
    def points(self):
        return self.region.coords(self.vertices)

    @cached_property
    def tree(self):
        return cKDTree(self.points)

    def require(self):
        if self.empty:
            raise EmptyProxy('the infinite-cluster proxy is empty')

    def project(self, points):
        """
        Proxy index (into `vertices`) of x-hat for each lattice point:
        nearest in the infinity norm, ties to the lexicographically
        smallest.
        """
        self.require()
        pts = np.asarray(points, dtype=np.float64).reshape(-1, self.region.dimension)
        dist, _ = self.tree.query(pts, p=np.inf)
        # Distances are integers, so half a unit separates the ties.
        balls = self.tree.query_ball_point(pts, dist + 0.5, p=np.inf)
        return np.fromiter((min(b) for b in balls), dtype=np.int64, count=len(pts))

    @cached_property
    def projection(self):
        """
        Vertex index of z-hat for every vertex z of the region.
        """
        return self.vertices[self.project(self.region.vertices())]


def make_proxy(cfg, rule='largest', working=None, forest=None):
    """
    The proxy restricted to the `working` region (default: all of
    `cfg.region`).

    'largest' takes the largest cluster of the whole sampled region, so
    sampling on an enlarged box B_{n + ceil(n/2)} and working on B_n
    gives the default construction; a largest cluster of one vertex
    gives an empty proxy. 'boundary' takes every cluster of size at
    least two that meets the outer face of the sampled region.
    """
    region = cfg.region
    forest = components(cfg) if forest is None else forest
    keep = vertex_mask(region, working)
    roots = forest.roots
    sizes = forest.root_sizes()
    if rule == 'largest':
        top = sizes.max()
        if top < 2:
            chosen = np.zeros(region.volume, dtype=np.bool_)
        else:
            # Ties go to the cluster holding the smallest vertex.
            root = roots[np.flatnonzero(sizes == top)[0]]
            chosen = roots == root
    elif rule == 'boundary':
        touching = np.unique(roots[region.boundary_mask()])
        chosen = np.isin(roots, touching) & (sizes >= 2)
    else:
        raise ValueError('unknown proxy rule {!r}'.format(rule))
    return InfiniteClusterProxy(region, np.flatnonzero(chosen & keep), rule)


def proxy_from_points(region, points):
    """
    A proxy given explicitly, for fixtures.
    """
    return InfiniteClusterProxy(region, np.flatnonzero(vertex_mask(region, points)), 'given')


def enlarged_box(dimension, n, center=None):
    """
    B_{n + ceil(n/2)}(center), the sampling box behind the default
    proxy of the working box B_n.
    """
    return box(dimension, n + (n + 1) // 2, center)


def cell_point(x):
    """
    Lattice point x_d with x in x_d + [-1/2, 1/2)^d.

    >>> cell_point((0.4, -0.5)).tolist()
    [0, 0]
    >>> cell_point((0.5, -0.51)).tolist()
    [1, -1]
    """
    return np.floor(np.asarray(x, dtype=np.float64) + 0.5).astype(np.int64)


def hat_point(cfg, proxy, x):
    """
    x-hat: the proxy vertex nearest to the cell of x in the infinity
    norm, ties to the lexicographically smallest.

    >>> from fastperc.sampler import BoxConfig, box
    >>> cfg = BoxConfig.from_edges(box(2, 1), [])
    >>> hat_point(cfg, proxy_from_points(cfg.region, [(1, 0), (0, 1)]), (0, 0))
    (0, 1)
    """
    proxy.require()
    i = proxy.project(cell_point(x))[0]
    return tuple(int(c) for c in proxy.points[i])


def hat_index(proxy, x):
    """
    Vertex index of x-hat.
    """
    return int(proxy.vertices[proxy.project(cell_point(x))[0]])


def dhat(cfg, proxy, x, y):
    """
    D(x-hat, y-hat); UNREACHABLE when the two projections lie in
    different clusters, which the 'largest' rule never produces.
    """
    proxy.require()
    a = hat_index(proxy, x)
    b = hat_index(proxy, y)
    if a == b:
        return 0
    hops = bfs_levels_jit(cfg.indptr, cfg.indices, np.array([a], np.int64),
                          np.ones(cfg.n_vertices, np.bool_), -1)
    return int(hops[b])


def dhat_from(cfg, proxy, x):
    """
    Hop distances from x-hat to every vertex, for repeated D-hat
    queries from one point.
    """
    proxy.require()
    a = hat_index(proxy, x)
    return bfs_levels_jit(cfg.indptr, cfg.indices, np.array([a], np.int64),
                          np.ones(cfg.n_vertices, np.bool_), -1)


def chemical_ball(cfg, proxy, center, t):
    """
    B-hat_t(center): every vertex z of the region with
    D-hat(z, center) <= t, as sorted vertex indices.
    """
    if t < 0:
        raise ValueError('t must be nonnegative')
    hops = dhat_from(cfg, proxy, center)
    return np.flatnonzero(hops[proxy.projection] <= t)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
