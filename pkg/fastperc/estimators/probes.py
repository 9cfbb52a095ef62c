"""
Tail probes for chemical distances inside the giant cluster.
"""
import numpy as np

from fastperc.cluster.search import UNREACHABLE, bfs_levels_jit
from fastperc.estimators.connection import beta_model, replicate_statistic
from fastperc.metric.distance import max_cluster_distance
from fastperc.metric.proxy import enlarged_box, make_proxy
from fastperc.sampler.box import box, vertex_mask
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET


def long_distance_probe(k, beta, n, factor, replicates, seed, workers=1,
                        miss_budget=DEFAULT_MISS_BUDGET):
    """
    Frequency of max D(x, y) > factor * n over x, y in B_n intersected
    with the largest cluster (sampled on B_{n + ceil(n/2)}).
    """
    region = enlarged_box(k.dimension, n)
    working = box(k.dimension, n)

    def exceeds(cfg):
        proxy = make_proxy(cfg, 'largest', working=working)
        if proxy.empty:
            return False
        mask = np.zeros(cfg.n_vertices, dtype=np.bool_)
        mask[proxy.vertices] = True
        return max_cluster_distance(cfg, mask)[0] > factor * n

    return replicate_statistic(beta_model(k, beta, miss_budget), region, exceeds,
                               replicates, seed, 'mc-long-distance', workers)


def finite_detour_probe(k, beta, n, replicates, seed, inner_exponent=1.0 / 16, reach=None,
                        workers=1, miss_budget=DEFAULT_MISS_BUDGET):
    """
    Frequency of: some x, y in B_r with r = floor(n ** inner_exponent)
    satisfy n < D(x, y) < inf, on the sampled box B_reach (default n).
    """
    reach = n if reach is None else reach
    r = int(np.floor(n ** inner_exponent))
    region = box(k.dimension, reach)
    inner = np.flatnonzero(vertex_mask(region, box(k.dimension, r)))

    def detour(cfg):
        indptr, indices = cfg.indptr, cfg.indices
        allowed = np.ones(cfg.n_vertices, dtype=np.bool_)
        for v in inner:
            hops = bfs_levels_jit(indptr, indices, np.array([v], np.int64), allowed, -1)
            d = hops[inner]
            if ((d > n) & (d != UNREACHABLE)).any():
                return True
        return False

    return replicate_statistic(beta_model(k, beta, miss_budget), region, detour,
                               replicates, seed, 'mc-finite-detour', workers)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
