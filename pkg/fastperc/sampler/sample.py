"""
Materialises BoxConfigs for the beta J model and the (p, f) model.

Displacements are enumerated in increasing infinity-norm up to a cutoff;
for each one the open base points come from block-minimum skipping in
`fastperc.coupling.hashing`, so the cost grows with the number of
blocks and open edges rather than with the number of vertex pairs.
"""
import logging
from functools import lru_cache

import numpy as np

from fastperc.coupling.field import CouplingField
from fastperc.coupling.hashing import sample_edges_jit
from fastperc.errors import BudgetInfeasible
from fastperc.kernel.kernel import open_probabilities
from fastperc.kernel.sums import tail_mass
from fastperc.sampler.config import BoxConfig, Provenance, filter_edge_length
from fastperc.utilities.lattice import half_displacements


logger = logging.getLogger(__name__)

DEFAULT_MISS_BUDGET = 1e-3

# Upper bound on enumerated displacement vectors.
MAX_DISPLACEMENTS = 1 << 24


def _check_budget(miss_budget):
    if not 0.0 < miss_budget <= 1.0:
        raise ValueError('miss_budget must lie in (0, 1]')


def cutoff_radius(region, tail, miss_budget):
    """
    Smallest infinity-norm radius R for which the expected number of open
    edges longer than R in the region stays below `miss_budget`, capped
    by the region's own extent (no longer edge fits).

    ``tail(R)`` bounds the per-vertex mass beyond infinity-radius R.
    Returns (R, bound on the expected misses).
    """
    return _cutoff(max(region.extent()), region.volume, tail, miss_budget)


def _cutoff(reach, volume, tail, miss_budget):
    R = 1
    while R < reach:
        missed = volume * tail(R)
        if missed < miss_budget:
            return R, missed
        R = max(R + 1, int(R * 1.25))
    return reach, 0.0


@lru_cache(maxsize=256)
def _kernel_cutoff(k, beta, volume, reach, miss_budget):
    return _cutoff(reach, volume, lambda R: beta * tail_mass(k, R), miss_budget)


@lru_cache(maxsize=256)
def _pf_cutoff(sf, volume, reach, miss_budget):
    return _cutoff(reach, volume, lambda R: sf.tail_mass(max(R, sf.near_radius)),
                   miss_budget)


def _sample(region, probabilities_of, field, cutoff):
    lo = region.lo_array
    hi = region.hi_array
    displacements = half_displacements(region.dimension, cutoff, region.extent())
    if len(displacements) > MAX_DISPLACEMENTS:
        raise BudgetInfeasible(
            '{} displacement classes exceed the enumeration limit'.format(len(displacements))
        )
    probs = probabilities_of(displacements)
    live = probs > 0
    if not live.any():
        return np.empty((0, 2), dtype=np.int64)
    return sample_edges_jit(lo, hi, np.ascontiguousarray(displacements[live]),
                            np.ascontiguousarray(probs[live]), field.key)


def sample_box(k, beta, region, field, miss_budget=DEFAULT_MISS_BUDGET):
    """
    Open edges of omega_beta on `region` (a Box or Rectangle).

    Each candidate edge within the cutoff is open iff
    ``edge_open(field, e, beta, k)``; longer displacements are skipped
    only while the expected number of skipped open edges, bounded by
    volume * beta * tail_mass, stays below `miss_budget`. Truncated
    kernels whose radius fits the cutoff are sampled exactly.

    >>> from fastperc.kernel import power_law
    >>> from fastperc.sampler.box import box
    >>> sample_box(power_law(2, 1.0, 4.0), 0.0, box(2, 3), CouplingField(1)).n_edges
    0
    """
    if beta < 0:
        raise ValueError('beta must be nonnegative')
    _check_budget(miss_budget)
    reach = max(region.extent())
    if k.power_tail is None:
        cutoff, missed = max(1, min(k.support_radius, reach)), 0.0
    else:
        cutoff, missed = _kernel_cutoff(k, float(beta), region.volume, reach,
                                        float(miss_budget))
    logger.debug('sampling %s at beta=%g with cutoff %d', k.spec(), beta, cutoff)

    edges = _sample(region, lambda v: open_probabilities(k, beta, v), field, cutoff) \
        if beta > 0 else np.empty((0, 2), dtype=np.int64)
    provenance = Provenance(model='betaJ', kernel=k.spec(), beta=float(beta),
                            seed=field.seed, streams=(field.stream_id,),
                            miss_budget=float(miss_budget), cutoff=int(cutoff),
                            miss_bound=float(missed))
    return BoxConfig(region, edges, provenance)


def sample_box_pf(sf, region, field, miss_budget=DEFAULT_MISS_BUDGET):
    """
    Open edges of the (p, f) model: nearest neighbours with probability
    p, longer edges with probability f(x - y).
    """
    _check_budget(miss_budget)

    cutoff, missed = _pf_cutoff(sf, region.volume, max(region.extent()), float(miss_budget))
    cutoff = max(cutoff, min(sf.near_radius, max(region.extent())))
    edges = _sample(region, sf.probabilities, field, cutoff)
    provenance = Provenance(model='pf', kernel=sf.spec(), seed=field.seed,
                            streams=(field.stream_id,), miss_budget=float(miss_budget),
                            cutoff=int(cutoff), miss_bound=float(missed))
    return BoxConfig(region, edges, provenance)


def resample(cfg, k=None, sf=None):
    """
    Regenerates a configuration from its provenance; the result has the
    same edge set as `cfg`.
    """
    prov = cfg.provenance
    field = CouplingField(prov.seed, prov.streams[0])
    if prov.model == 'betaJ':
        out = sample_box(k, prov.beta, cfg.region, field, prov.miss_budget)
    else:
        out = sample_box_pf(sf, cfg.region, field, prov.miss_budget)
    if prov.max_length is not None:
        out = filter_edge_length(out, prov.max_length)
    return out


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
