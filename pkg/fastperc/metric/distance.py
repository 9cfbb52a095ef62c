"""
Chemical distances: hop counts of shortest open paths, one unit per
open edge whatever its geometric length.
"""
from dataclasses import dataclass

import numpy as np

from fastperc.cluster.search import UNREACHABLE, bfs_levels_jit, eccentricities_jit
from fastperc.errors import EmptySources
from fastperc.sampler.box import vertex_index, vertex_mask


@dataclass(frozen=True, eq=False)
class DistanceField:
    """
    Hop distances of every vertex of `cfg` from `sources` (sorted
    vertex indices). Unreached vertices hold UNREACHABLE.
    """
    cfg: object
    sources: np.ndarray
    hops: np.ndarray
    max_depth: int = -1

    def distance(self, x):
        return int(self.hops[vertex_index(self.cfg.region, x)])

    def reached(self):
        return self.hops != UNREACHABLE

    def ball(self, k):
        """
        B_k: vertices within k hops.
        """
        return np.flatnonzero(self.hops <= k)

    def sphere(self, k):
        """
        S_k: vertices at exactly k hops.
        """
        return np.flatnonzero(self.hops == k)

    def eccentricity(self):
        reached = self.hops[self.reached()]
        return int(reached.max())


def bfs_distances(cfg, sources, max_depth=-1, allowed=None):
    """
    >>> from fastperc.sampler import BoxConfig, box
    >>> cfg = BoxConfig.from_edges(box(1, 8), [((0,), (7,))])
    >>> bfs_distances(cfg, [(0,)]).distance((7,))
    1
    """
    mask = vertex_mask(cfg.region, sources)
    if not mask.any():
        raise EmptySources('bfs_distances needs at least one source')
    src = np.flatnonzero(mask)
    allowed = np.ones(cfg.n_vertices, np.bool_) if allowed is None else allowed
    hops = bfs_levels_jit(cfg.indptr, cfg.indices, src, allowed, max_depth)
    return DistanceField(cfg, src, hops, max_depth)


def max_cluster_distance(cfg, A=None):
    """
    Largest finite chemical distance between two vertices of A, with
    the attaining pair as lattice points; (0, None) when no two
    vertices of A share a cluster. Paths may leave A.

    >>> from fastperc.sampler import BoxConfig, box
    >>> max_cluster_distance(BoxConfig.from_edges(box(2, 2), []))
    (0, None)
    """
    members = np.flatnonzero(vertex_mask(cfg.region, A))
    if len(members) == 0:
        return 0, None
    allowed = np.ones(cfg.n_vertices, np.bool_)
    best, other = eccentricities_jit(cfg.indptr, cfg.indices, members, allowed)
    i = int(np.argmax(best))
    if best[i] == 0:
        return 0, None
    pair = cfg.region.coords(np.array([members[i], other[i]]))
    return int(best[i]), (tuple(int(c) for c in pair[0]), tuple(int(c) for c in pair[1]))


def hop_lower_bound(cfg, x, y):
    """
    ceil(|x - y|_inf / L) with L the longest open edge; no open path
    between x and y is shorter.
    """
    gap = int(np.abs(np.asarray(x, dtype=np.int64) - np.asarray(y, dtype=np.int64)).max())
    if gap == 0:
        return 0
    lengths = cfg.edge_lengths()
    if len(lengths) == 0:
        return UNREACHABLE
    longest = int(lengths.max())
    return -(-gap // longest)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
