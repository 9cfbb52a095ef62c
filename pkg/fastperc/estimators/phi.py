"""
phi_{beta,J}(S) = sum_{x in S} sum_{y not in S} P(0 <-> x within S) (1 - exp(-beta J(x - y))).

phi(S) < 1 for a finite S containing the origin certifies beta <= beta_c.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fastperc.cluster.clusters import components
from fastperc.core.replicates import map_replicates, mean_stderr
from fastperc.coupling.field import CouplingField
from fastperc.errors import OriginMissing
from fastperc.estimators.exact import connection_probabilities
from fastperc.kernel.kernel import open_probabilities
from fastperc.kernel.sums import open_mass
from fastperc.sampler.box import Rectangle, vertex_mask
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET, sample_box
from fastperc.utilities.lattice import as_points, lexsort_points


# Allowance per vertex of S for the truncated far part of the y-sum.
PHI_TAIL_TOL = 1e-9


@dataclass(frozen=True)
class PhiValue:
    value: float
    upper: Optional[float]
    certified: bool
    mode: str
    stderr: float = 0.0
    replicates: int = 0
    seed: Optional[int] = None


def outer_masses(k, beta, points):
    """
    sum_{y not in S} (1 - exp(-beta J(x - y))) for every x in S.
    """
    total = open_mass(k, beta)
    out = np.empty(len(points))
    for i, x in enumerate(points):
        others = points[(points != x).any(axis=1)] - x
        out[i] = total - (open_probabilities(k, beta, others).sum() if len(others) else 0.0)
    return out


def phi_value(k, beta, S, mode='exact', replicates=1000, seed=0, workers=1,
              miss_budget=DEFAULT_MISS_BUDGET):
    """
    In 'exact' mode the connection probabilities come from exhaustive
    enumeration (|S| <= 6) and `upper` adds the tail allowance; in 'mc'
    mode they are estimated from sampled configurations and no
    certificate is issued.

    >>> from fastperc.kernel import nearest_neighbor
    >>> phi_value(nearest_neighbor(1, 1.0), 0.0, [(0,)]).value
    0.0
    """
    if beta < 0:
        raise ValueError('beta must be nonnegative')
    pts = lexsort_points(as_points(S, k.dimension))
    origin = (pts == 0).all(axis=1)
    if not origin.any():
        raise OriginMissing('S must contain the origin')
    outer = outer_masses(k, beta, pts)

    if mode == 'exact':
        _, profile, _ = connection_probabilities(k, beta, pts, np.zeros(k.dimension, np.int64))
        value = float(profile @ outer)
        upper = value + len(pts) * PHI_TAIL_TOL
        return PhiValue(value, upper, upper < 1.0, mode)

    if mode != 'mc':
        raise ValueError('mode must be exact or mc')
    region = Rectangle(tuple(int(c) for c in pts.min(axis=0)),
                       tuple(int(c) for c in pts.max(axis=0)))
    inside = vertex_mask(region, pts)
    where = region.index(pts)
    source = where[np.flatnonzero(origin)[0]]

    def run(index, rseed):
        cfg = sample_box(k, beta, region, CouplingField(rseed), miss_budget)
        roots = components(cfg, inside).roots
        return float((roots[where] == roots[source]) @ outer)

    value, stderr = mean_stderr(map_replicates(run, replicates, seed, workers))
    return PhiValue(value, None, False, mode, stderr, replicates, seed)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
