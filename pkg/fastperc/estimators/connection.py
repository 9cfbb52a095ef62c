"""
Monte Carlo estimators on sampled boxes: connection probabilities,
crossing of the box boundary and largest-cluster density.

Replicate i always uses the coupling field seeded by
``replicate_seed(seed, i)``, so estimates at different beta share
their random numbers and are monotone replicate by replicate.
"""
import logging

from fastperc.cluster.clusters import components, largest_cluster
from fastperc.core.replicates import map_replicates
from fastperc.coupling.field import CouplingField
from fastperc.estimators.records import estimate
from fastperc.sampler.box import Rectangle, box, vertex_index, vertex_mask
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET, sample_box, sample_box_pf
from fastperc.utilities.lattice import as_points


logger = logging.getLogger(__name__)


def beta_model(k, beta, miss_budget=DEFAULT_MISS_BUDGET):
    """
    draw(region, field) for the beta J model.
    """
    def draw(region, field):
        return sample_box(k, beta, region, field, miss_budget)
    return draw


def pf_model(sf, miss_budget=DEFAULT_MISS_BUDGET):
    """
    draw(region, field) for the (p, f) model.
    """
    def draw(region, field):
        return sample_box_pf(sf, region, field, miss_budget)
    return draw


def replicate_statistic(draw, region, statistic, replicates, seed, method, workers=1):
    """
    Estimate of ``statistic(cfg)`` over configurations drawn on `region`.
    """
    def run(index, rseed):
        return float(statistic(draw(region, CouplingField(rseed))))

    values = map_replicates(run, replicates, seed, workers)
    return estimate(values, seed, method)


def _bounding_rectangle(points):
    return Rectangle(tuple(int(c) for c in points.min(axis=0)),
                     tuple(int(c) for c in points.max(axis=0)))


def connect_probability(k, beta, V, x, targets, replicates, seed, workers=1,
                        miss_budget=DEFAULT_MISS_BUDGET):
    """
    Estimate of P(x is joined within V to some vertex of `targets`);
    a single target point gives P(x <-> y within V).
    """
    pts = as_points(V, k.dimension)
    region = _bounding_rectangle(pts)
    inside = vertex_mask(region, pts)
    source = vertex_index(region, x)
    wanted = vertex_mask(region, as_points(targets, k.dimension))

    def hit(cfg):
        roots = components(cfg, inside).roots
        return (roots[wanted] == roots[source]).any()

    return replicate_statistic(beta_model(k, beta, miss_budget), region, hit,
                               replicates, seed, 'mc-connect', workers)


def crossing_statistic(n, dimension):
    """
    1 when the cluster of the center of B_n meets the outer face.
    """
    region = box(dimension, n)
    face = region.boundary_mask()
    center = region.volume // 2

    def crossed(cfg):
        roots = components(cfg).roots
        return (roots[face] == roots[center]).any()

    return region, crossed


def density_statistic(n, dimension):
    """
    |K_max(B_n)| / |B_n|.
    """
    region = box(dimension, n)

    def density(cfg):
        return largest_cluster(components(cfg))[0] / region.volume

    return region, density


def boundary_connection_prob(k, beta, n, replicates, seed, workers=1,
                             miss_budget=DEFAULT_MISS_BUDGET, draw=None):
    """
    Estimate of P(0 <-> boundary of B_n within B_n).

    >>> from fastperc.kernel import power_law
    >>> boundary_connection_prob(power_law(2, 1.0, 5.0), 0.0, 2, 3, seed=1).value
    0.0
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    region, crossed = crossing_statistic(n, k.dimension)
    draw = beta_model(k, beta, miss_budget) if draw is None else draw
    return replicate_statistic(draw, region, crossed, replicates, seed,
                               'mc-crossing', workers)


def theta_density(k, beta, n, replicates, seed, workers=1,
                  miss_budget=DEFAULT_MISS_BUDGET, draw=None):
    """
    Estimate of the largest-cluster density of B_n, the finite-volume
    proxy of theta(beta, J).
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    region, density = density_statistic(n, k.dimension)
    draw = beta_model(k, beta, miss_budget) if draw is None else draw
    return replicate_statistic(draw, region, density, replicates, seed,
                               'mc-density', workers)


def giant_cluster_profile(k, beta, radii, replicates, seed, workers=1,
                          miss_budget=DEFAULT_MISS_BUDGET):
    """
    theta_density per radius; the per-replicate spread is
    ``Estimate.sd``.
    """
    out = []
    for n in radii:
        est = theta_density(k, beta, n, replicates, seed, workers, miss_budget)
        logger.info('n=%d: density %.4f (sd %.4f)', n, est.value, est.sd)
        out.append((int(n), est))
    return out


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
