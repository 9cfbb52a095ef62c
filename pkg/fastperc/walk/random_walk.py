"""
Simple random walks on the open graph of a BoxConfig. Step t of a walk
picks a uniform open neighbour using the keyed uniform of (seed, t), so
walks are reproducible and independent of scheduling.
"""
from dataclasses import dataclass

import numpy as np

from fastperc.core.convert_to_jit import convert_to_jit
from fastperc.core.replicates import map_replicates
from fastperc.coupling.hashing import KEY_TAG, coupling_key, fold_jit, to_unit_jit
from fastperc.errors import IsolatedStart
from fastperc.estimators.records import estimate
from fastperc.sampler.box import vertex_index


# Stream of the walk uniforms; clear of the three edge streams.
WALK_STREAM = 7


@dataclass(frozen=True, eq=False)
class WalkStats:
    start: tuple
    steps: int
    returns: int
    first_return: int
    visits: np.ndarray
    seed: int

    def __post_init__(self):
        assert 0 <= self.returns <= self.steps


def walk(indptr, indices, start, steps, key):
    """
    Runs one walk; returns (number of returns to start, first return
    step or -1, visit counts).
    """
    n = len(indptr) - 1
    visits = np.zeros(n, np.int64)
    base = fold_jit(key, KEY_TAG)
    at = start
    visits[at] += 1
    returns = 0
    first = -1
    for t in range(steps):
        lo = indptr[at]
        deg = indptr[at + 1] - lo
        u = to_unit_jit(fold_jit(base, t))
        at = indices[lo + int(u * deg)]
        visits[at] += 1
        if at == start:
            returns += 1
            if first < 0:
                first = t + 1
    return returns, first, visits


walk_jit = convert_to_jit(walk)


def _start(cfg, start):
    s = vertex_index(cfg.region, start)
    if cfg.degree()[s] == 0:
        raise IsolatedStart('{} has no open edge'.format(tuple(start)))
    return s


def walk_stats(cfg, start, steps, seed):
    """
    >>> from fastperc.sampler import BoxConfig, box
    >>> cfg = BoxConfig.from_edges(box(1, 1), [((0,), (1,))])
    >>> stats = walk_stats(cfg, (0,), 10, seed=3)
    >>> stats.returns, stats.first_return
    (5, 2)
    """
    s = _start(cfg, start)
    key = coupling_key(seed, WALK_STREAM)
    returns, first, visits = walk_jit(cfg.indptr, cfg.indices, s, int(steps), key)
    return WalkStats(tuple(start), int(steps), int(returns), int(first), visits, seed)


def return_frequency(cfg, start, steps, replicates, seed, workers=1):
    """
    Estimate of P(the walk from `start` revisits it within `steps`).
    """
    s = _start(cfg, start)
    indptr, indices = cfg.indptr, cfg.indices

    def run(index, rseed):
        key = coupling_key(rseed, WALK_STREAM)
        return walk_jit(indptr, indices, s, int(steps), key)[0] > 0

    return estimate(map_replicates(run, replicates, seed, workers), seed, 'walk-return')


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
