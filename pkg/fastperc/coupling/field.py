"""
Coupling fields: the per-edge uniforms U_e as pure functions of
(seed, stream, edge).

An edge is open in omega_beta iff U_e < 1 - exp(-beta J(e)), so one
field realises every beta at once and the open sets are nested in
beta. Streams 0, 1 and 2 are reserved for the independent layers
omega, omega' and omega'' used when sprinkling.
"""
from dataclasses import dataclass

import numpy as np

from fastperc.coupling.hashing import (
    coupling_key, edge_unit_jit, key_unit_jit, splitmix64_jit
)
from fastperc.errors import SameStream, SelfLoop
from fastperc.kernel.kernel import open_probability


MASK64 = (1 << 64) - 1

OMEGA, OMEGA_PRIME, OMEGA_SECOND = 0, 1, 2


@dataclass(frozen=True)
class CouplingField:
    seed: int
    stream_id: int = OMEGA

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError('seed must be an unsigned 64-bit integer')
        if not 0 <= self.stream_id < 1 << 16:
            raise ValueError('stream_id must be a small nonnegative integer')

    @property
    def key(self):
        return coupling_key(self.seed, self.stream_id)

    def stream(self, stream_id):
        return CouplingField(self.seed, stream_id)


def canonical_edge(e):
    """
    (base, v) for an unordered pair: base is the lexicographically
    smaller endpoint and v = other - base.

    >>> canonical_edge(((1, 0), (0, 2)))
    (array([0, 2]), array([ 1, -2]))
    """
    a, b = (np.asarray(x, dtype=np.int64).ravel() for x in e)
    if len(a) != len(b):
        raise ValueError('endpoints differ in dimension')
    if np.array_equal(a, b):
        raise SelfLoop('an edge needs two distinct vertices')
    if tuple(b) < tuple(a):
        a, b = b, a
    return a, b - a


def edge_uniform(field, e):
    """
    U_e in [0, 1), symmetric in the endpoints and deterministic.

    >>> F = CouplingField(7)
    >>> edge_uniform(F, ((0, 0), (1, 0))) == edge_uniform(F, ((1, 0), (0, 0)))
    True
    """
    base, v = canonical_edge(e)
    return float(edge_unit_jit(field.key, base, v))


def edge_open(field, e, beta, k):
    """
    True iff U_e < 1 - exp(-beta J(e)); nondecreasing in beta.

    >>> from fastperc.kernel import power_law
    >>> edge_open(CouplingField(1), ((0, 0), (0, 1)), 0.0, power_law(2, 1.0, 4.0))
    False
    """
    base, v = canonical_edge(e)
    p = open_probability(k, beta, v)
    return bool(edge_unit_jit(field.key, base, v) < p)


def union_field(e, k, f1, beta, f2, alpha):
    """
    omega_beta (on `f1`) OR omega'_alpha (on `f2`). Distinct streams are
    independent, so the union is distributed as omega_{alpha + beta}.
    """
    if f1.stream_id == f2.stream_id:
        raise SameStream('sprinkling needs two independent streams')
    return edge_open(f1, e, beta, k) or edge_open(f2, e, alpha, k)


def replicate_seed(seed, index):
    """
    Seed of replicate `index`, a pure function of the base seed so
    results do not depend on scheduling.

    >>> replicate_seed(5, 0) == replicate_seed(5, 0) != replicate_seed(5, 1)
    True
    """
    h = splitmix64_jit(np.uint64(seed & MASK64) ^ np.uint64(splitmix64_jit(np.uint64(index))))
    return int(h)


def key_uniform(seed, stream, coords):
    """
    Uniform keyed by (seed, stream, coords) for non-edge objects.
    """
    key = coupling_key(seed, stream)
    return float(key_unit_jit(key, np.asarray(coords, dtype=np.int64)))


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])
