"""
Directed site-bond percolation on the quadrant N_0 x N_0.

A_0 = {0}. Level k is built from A_{k-1} in two passes over the parents
in lexicographic order: the e_1 pass decides every bond (u, u + e_1),
declaring u + e_1 active or dead; the e_2 pass then decides (u, u + e_2)
only for children the e_1 pass left undeclared. A decided bond
(x, e_i) is open with probability q_{x, e_i}, independently of the
rest.

Level k is indexed by the first coordinate a, so (a, k - a) is
lexicographically increasing in a.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from fastperc.core.convert_to_jit import convert_to_jit
from fastperc.core.replicates import map_replicates
from fastperc.coupling.hashing import KEY_TAG, coupling_key, fold_jit, to_unit_jit
from fastperc.estimators.records import estimate


logger = logging.getLogger(__name__)

DIRECTED_STREAM = 8


@dataclass(frozen=True, eq=False)
class DirectedModel:
    """
    `q[i, a, b]` is the open probability of the bond from (a, b) in
    direction e_{i+1}; every entry lies in [rho, 1].
    """
    rho: float
    q: np.ndarray

    def __post_init__(self):
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError('rho must lie in [0, 1]')
        assert self.q.ndim == 3 and self.q.shape[0] == 2
        if (self.q < self.rho).any() or (self.q > 1.0).any():
            raise ValueError('bond probabilities must lie in [rho, 1]')

    @property
    def horizon(self):
        return min(self.q.shape[1], self.q.shape[2])


def directed_model(rho, horizon=128, q=None):
    """
    The model with every q equal to `rho`, or with explicit `q` of
    shape (2, horizon, horizon).

    >>> directed_model(0.5, horizon=4).q.shape
    (2, 4, 4)
    """
    if q is None:
        q = np.full((2, horizon, horizon), float(rho))
    return DirectedModel(float(rho), np.asarray(q, dtype=np.float64))


def site_unit(key, a, b):
    return to_unit_jit(fold_jit(fold_jit(fold_jit(key, KEY_TAG), a), b))


site_unit_jit = convert_to_jit(site_unit)


def survival_depth(q, depth, width, key):
    """
    Largest k <= depth with A_k nonempty. With width >= 0 only sites
    with first coordinate below `width` are kept.

    Each site is decided at most once, by the e_1 bond of its left
    parent when that parent is active and otherwise by the e_2 bond
    of its lower parent, so one uniform per site suffices.
    """
    size = depth + 2
    active = np.zeros(size, np.bool_)
    new = np.zeros(size, np.bool_)
    active[0] = True
    for k in range(1, depth + 1):
        alive = False
        for a in range(k + 1):
            new[a] = False
            if width >= 0 and a >= width:
                continue
            if a > 0 and active[a - 1]:
                p = q[0, a - 1, k - a]
            elif a < k and active[a]:
                p = q[1, a, k - 1 - a]
            else:
                continue
            if site_unit_jit(key, a, k - a) < p:
                new[a] = True
                alive = True
        for a in range(k + 1):
            active[a] = new[a]
        if not alive:
            return k - 1
    return depth


survival_depth_jit = convert_to_jit(survival_depth)


def _check_depth(model, depth):
    if depth < 0:
        raise ValueError('depth must be nonnegative')
    if depth > model.horizon:
        raise ValueError('depth {} exceeds the model horizon {}'.format(depth, model.horizon))


def directed_survival(model, depth, replicates, seed, width=None, workers=1):
    """
    Estimate of P(A_depth is nonempty). Replicates share their site
    uniforms across models, so for constant q the estimate is
    nondecreasing in q seed by seed.

    >>> directed_survival(directed_model(1.0, horizon=8), 8, 5, seed=0).value
    1.0
    """
    _check_depth(model, depth)
    w = -1 if width is None else int(width)
    q = np.ascontiguousarray(model.q)

    def run(index, rseed):
        key = coupling_key(rseed, DIRECTED_STREAM)
        return survival_depth_jit(q, int(depth), w, key) == depth

    return estimate(map_replicates(run, replicates, seed, workers), seed, 'mc-directed')


def _level_transitions(q, k, state, width):
    """
    Distribution of the level-k occupation bitmask given level k - 1.
    """
    parents = [a for a in range(min(k, width)) if state >> a & 1]
    bonds = []
    declared = set()
    for a in parents:
        declared.add(a + 1)
        if a + 1 < width:
            bonds.append((a + 1, q[0, a, k - 1 - a]))
    for a in parents:
        if a not in declared:
            declared.add(a)
            bonds.append((a, q[1, a, k - 1 - a]))
    out = {}
    for outcome in itertools.product((False, True), repeat=len(bonds)):
        prob = 1.0
        child = 0
        for opened, (a, p) in zip(outcome, bonds):
            prob *= p if opened else 1.0 - p
            if opened:
                child |= 1 << a
        if prob > 0.0:
            out[child] = out.get(child, 0.0) + prob
    return out


def transfer_matrix_survival(model, depth, width=4):
    """
    Exact P(A_depth is nonempty) for the model kept to the strip of
    sites with first coordinate below `width`, by propagating the
    distribution of the occupied set level by level.

    >>> transfer_matrix_survival(directed_model(0.5, horizon=4), 1, width=1)
    0.5
    """
    _check_depth(model, depth)
    if width < 1:
        raise ValueError('width must be positive')
    dist = {1: 1.0}
    for k in range(1, depth + 1):
        nxt = {}
        for state, p in dist.items():
            if state == 0:
                continue
            for child, t in _level_transitions(model.q, k, state, width).items():
                nxt[child] = nxt.get(child, 0.0) + p * t
        dist = nxt
        logger.debug('level %d: %d states', k, len(dist))
    return float(sum(p for s, p in dist.items() if s))


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
