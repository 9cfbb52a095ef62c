"""
Finite-box probes behind the renormalisation: connections from a
small box to the pads of a surrounding annulus, and clusters that are
deep without containing a large finite-range piece.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from fastperc.cluster.clusters import components, find_mpads, pad_union
from fastperc.cluster.search import UNREACHABLE, bfs_levels_jit
from fastperc.core.replicates import map_replicates
from fastperc.coupling.field import CouplingField
from fastperc.errors import GeometryInfeasible
from fastperc.estimators.connection import beta_model, replicate_statistic
from fastperc.estimators.records import Estimate, estimate
from fastperc.sampler.box import box, vertex_index, vertex_mask
from fastperc.sampler.config import filter_edge_length
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET


logger = logging.getLogger(__name__)


def _edge_between(cfg, a, b):
    e = cfg.edges
    if len(e) == 0:
        return False
    return bool(((a[e[:, 0]] & b[e[:, 1]]) | (b[e[:, 0]] & a[e[:, 1]])).any())


def annulus_statistic(dimension, n, m, delta):
    """
    (region, statistic) for the event that K_R(B_n), R = B_m(0), is
    joined by one open edge to the union of open m-pads inside the
    annulus B_{(1+delta)n} minus B_n.
    """
    if not 0 < delta <= 1:
        raise GeometryInfeasible('delta must lie in (0, 1]')
    if m < 0 or 3 * m >= delta * n:
        raise GeometryInfeasible('m = {} does not fit an annulus of width {}'.format(
            m, delta * n))
    region = box(dimension, int(math.floor((1 + delta) * n)))
    inner = vertex_mask(region, box(dimension, n))
    sources = np.flatnonzero(vertex_mask(region, box(dimension, m)))

    def joined(cfg):
        hops = bfs_levels_jit(cfg.indptr, cfg.indices, sources, inner, -1)
        cluster = hops != UNREACHABLE
        pads = find_mpads(cfg, ~inner, m)
        if len(pads) == 0:
            return False
        return _edge_between(cfg, cluster, pad_union(region, pads, m))

    return region, joined


def annulus_pad_probe(k, beta, n, m, delta, replicates, seed, workers=1,
                      miss_budget=DEFAULT_MISS_BUDGET):
    """
    Estimate of P(K_R(B_n) ~ P^delta_{m,n}) with R = B_m(0).

    >>> from fastperc.kernel import nearest_neighbor
    >>> annulus_pad_probe(nearest_neighbor(2, 1.0), 0.0, 6, 1, 1.0, 2, seed=0).value
    0.0
    """
    region, joined = annulus_statistic(k.dimension, n, m, delta)
    return replicate_statistic(beta_model(k, beta, miss_budget), region, joined,
                               replicates, seed, 'mc-annulus-pad', workers)


@dataclass(frozen=True)
class DepthPadEstimate:
    """
    Frequency of L_k^r(0) together with the mean number of K-boxes the
    layered exploration opened and the frequency with which one of
    them held a finite-range cluster of size at least k^(1/(4d)).
    """
    event: Estimate
    explored_boxes: Estimate
    box_found: Estimate
    box_side: int
    threshold: float


def _box_clusters(cfg_N, region, side):
    """
    K-box label of every vertex and the size of its omega_{<=N}
    cluster inside its own K-box.
    """
    labels = np.floor_divide(region.vertices(), side)
    labels -= labels.min(axis=0)
    ids = np.ravel_multi_index(tuple(labels.T), tuple(labels.max(axis=0) + 1))
    e = cfg_N.edges
    local = cfg_N.with_edges(e[ids[e[:, 0]] == ids[e[:, 1]]])
    return ids, components(local).root_sizes()


def _explore_boxes(ids, sizes, hops, depth, threshold):
    """
    Opens each K-box the first time a BFS sphere of radius at most
    depth // 2 meets it and looks at the in-box cluster of its
    lexicographically first vertex on that sphere. Returns (boxes
    opened, whether one of those clusters reached the threshold).
    """
    reached = np.flatnonzero(hops <= depth // 2)
    order = reached[np.lexsort((reached, hops[reached]))]
    _, first = np.unique(ids[order], return_index=True)
    firsts = order[first]
    return len(firsts), bool((sizes[firsts] >= threshold).any())


def depth_no_pad_probe(k, beta, r, N, depth, replicates, seed, reach=None, workers=1,
                       miss_budget=DEFAULT_MISS_BUDGET):
    """
    Estimate of P(L_k^r(0)) with k = `depth`: the ball B_k(0) of
    omega_{<=r} holds at least k vertices, yet no omega_{<=N} cluster
    meets it in k^(1/(4d)) or more vertices. Lengths are infinity
    norms; `r` may be inf. The box sampled is B_reach (default k * r,
    or k when r is infinite).
    """
    if not r > N:
        raise GeometryInfeasible('the edge-length cap r must exceed N')
    if depth < 1:
        raise ValueError('depth must be positive')
    d = k.dimension
    threshold = depth ** (1.0 / (4 * d))
    side = int(math.ceil(threshold))
    if reach is None:
        reach = depth if math.isinf(r) else int(depth * r)
    region = box(d, int(reach))
    origin = vertex_index(region, np.zeros(d, np.int64))
    draw = beta_model(k, beta, miss_budget)
    logger.info('L_k probe: k=%d, K=%d, reach=%d', depth, side, reach)

    def run(index, rseed):
        cfg = draw(region, CouplingField(rseed))
        cfg_r = cfg if math.isinf(r) else filter_edge_length(cfg, r)
        cfg_N = filter_edge_length(cfg, N)
        hops = bfs_levels_jit(cfg_r.indptr, cfg_r.indices, np.array([origin], np.int64),
                              np.ones(cfg.n_vertices, np.bool_), depth)
        ball = np.flatnonzero(hops != UNREACHABLE)
        ids, sizes = _box_clusters(cfg_N, region, side)
        opened, found = _explore_boxes(ids, sizes, hops, depth, threshold)
        if len(ball) < depth:
            return False, opened, found
        roots = components(cfg_N).roots[ball]
        largest = np.unique(roots, return_counts=True)[1].max()
        return bool(largest < threshold), opened, found

    rows = map_replicates(run, replicates, seed, workers)
    events, opened, found = zip(*rows)
    return DepthPadEstimate(estimate(events, seed, 'mc-depth-no-pad'),
                            estimate(opened, seed, 'mc-boxes-opened'),
                            estimate(found, seed, 'mc-box-found'), side, threshold)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
